"""
Maps on oriented surfaces encoded as permutation pairs.

``x`` rotates darts around their vertices, ``y`` swaps the two darts of each
edge, and the cycles of ``y x^{-1}`` are the face boundaries. A one-vertex map
with ``k`` edges fixes ``x`` to the standard ``2k``-cycle and is determined by
``y`` alone.
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass
from math import lcm

from .perm import (
    Permutation,
    compose,
    cycle_decomposition,
    format_cycles,
    inverse,
    is_free_involution,
    parse_cycles,
    standard_cycle,
)


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class DartMap:
    x: Permutation
    y: Permutation

    def __post_init__(self):
        if self.x.degree != self.y.degree:
            raise MapError(f"degree mismatch: x has {self.x.degree}, y has {self.y.degree}")
        if not is_free_involution(self.y):
            raise MapError(f"y = {format_cycles(self.y)} is not a free involution")
        orbit = _orbit(0, self.x, self.y)
        if len(orbit) != self.degree:
            outside = min(set(range(self.degree)) - orbit)
            raise MapError(
                f"<x, y> is not transitive: the orbit of 0 has {len(orbit)} darts "
                f"and misses dart {outside}"
            )

    @property
    def degree(self) -> int:
        return self.x.degree

    @property
    def edges(self) -> int:
        return self.degree // 2


def _orbit(start, *gens):
    orbit = {start}
    stack = [start]
    while stack:
        i = stack.pop()
        for g in gens:
            j = g.images[i]
            if j not in orbit:
                orbit.add(j)
                stack.append(j)
    return orbit


def new_dart_map(x: Permutation, y: Permutation) -> DartMap:
    return DartMap(x, y)


@dataclass(frozen=True)
class OneVertexMap:
    k: int
    y: Permutation

    def __post_init__(self):
        if self.k < 1:
            raise MapError(f"k must be positive, got {self.k}")
        if self.y.degree != 2 * self.k:
            raise MapError(f"y has degree {self.y.degree}, expected {2 * self.k}")
        if not is_free_involution(self.y):
            raise MapError(f"y = {format_cycles(self.y)} is not a free involution")

    @property
    def x(self) -> Permutation:
        return standard_cycle(2 * self.k)

    def __str__(self):
        return f"k={self.k}; y={format_cycles(self.y)}"


def one_vertex(k: int, y: Permutation) -> OneVertexMap:
    return OneVertexMap(k, y)


def as_dart_map(m: OneVertexMap) -> DartMap:
    return DartMap(m.x, m.y)


def _dart_map(m) -> DartMap:
    return as_dart_map(m) if isinstance(m, OneVertexMap) else m


def face_permutation(m) -> Permutation:
    m = _dart_map(m)
    return compose(m.y, inverse(m.x))


def face_circuits(m) -> list[tuple[int, ...]]:
    """Cycles of ``y x^{-1}`` in canonical order, 1-cycles included."""
    return cycle_decomposition(face_permutation(m))


@dataclass(frozen=True)
class MapProfile:
    vertices: int
    edges: int
    faces: int
    genus: int
    map_type: tuple[int, int]
    vertex_valences: tuple[int, ...]
    face_valences: tuple[int, ...]
    uniform: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["map_type"] = list(self.map_type)
        d["vertex_valences"] = list(self.vertex_valences)
        d["face_valences"] = list(self.face_valences)
        return d


def profile(m) -> MapProfile:
    """
    Count vertices, edges and faces and derive the genus from
    ``V - E + F = 2 - 2g``.
    """
    m = _dart_map(m)
    vertex_valences = tuple(sorted(len(c) for c in cycle_decomposition(m.x)))
    face_valences = tuple(sorted(len(c) for c in face_circuits(m)))
    v, e, f = len(vertex_valences), m.edges, len(face_valences)
    chi = v - e + f
    assert chi % 2 == 0 and chi <= 2, f"impossible Euler characteristic {chi}"
    n, r = lcm(*vertex_valences), lcm(*face_valences)
    return MapProfile(
        vertices=v,
        edges=e,
        faces=f,
        genus=(2 - chi) // 2,
        map_type=(n, r),
        vertex_valences=vertex_valences,
        face_valences=face_valences,
        uniform=all(a == n for a in vertex_valences) and all(b == r for b in face_valences),
    )


def genus(m) -> int:
    return profile(m).genus


_FIELD = re.compile(r"\s*(\w+)\s*=\s*([^;]*)")


def parse_map(text: str):
    """
    Parse ``"k=3; y=(0 3)(1 4)(2 5)"`` into a :class:`OneVertexMap` or
    ``"x=...; y=...; degree=24"`` into a :class:`DartMap`.
    """
    fields = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        m = _FIELD.fullmatch(part)
        if m is None:
            raise MapError(f"cannot parse map field {part.strip()!r}")
        fields[m.group(1)] = m.group(2).strip()
    if "k" in fields:
        k = int(fields["k"])
        return OneVertexMap(k, parse_cycles(fields.get("y", ""), 2 * k))
    if "degree" in fields:
        n = int(fields["degree"])
        return DartMap(parse_cycles(fields.get("x", ""), n), parse_cycles(fields.get("y", ""), n))
    raise MapError("map literal needs either k=... or degree=...")


def format_map(m) -> str:
    if isinstance(m, OneVertexMap):
        return str(m)
    return f"x={format_cycles(m.x)}; y={format_cycles(m.y)}; degree={m.degree}"
