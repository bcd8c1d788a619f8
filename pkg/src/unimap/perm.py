r"""
Permutations of the dart set `\{0, 1, ..., n-1\}`.

A :class:`Permutation` is an immutable image tuple together with its degree.
Products use functional (left) composition: ``compose(a, b)`` applies ``b``
first, so the face permutation of a map ``(x, y)`` is
``compose(y, inverse(x))``.

Cycle notation is 0-based, e.g. ``"(0 10)(1 17)"``; fixed points are omitted
when printing and the identity prints as ``"()"``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


class PermutationError(ValueError):
    pass


class CycleParseError(PermutationError):
    """Malformed cycle notation; carries the offending token and position."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise PermutationError("degree must be at least 1")
        if sorted(images) != list(range(n)):
            raise PermutationError(f"not a bijection of 0..{n - 1}: {images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self):
        return len(self.images)

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return (self.degree, self.images) < (other.degree, other.images)

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, n):
        return power(self, n)


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(degree)))


def _check_degrees(*perms: Permutation) -> int:
    n = perms[0].degree
    for p in perms[1:]:
        if p.degree != n:
            raise PermutationError(f"degree mismatch: {n} vs {p.degree}")
    return n


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return the product ``a b``, i.e. ``i -> a(b(i))``."""
    _check_degrees(a, b)
    ai = a.images
    return Permutation(tuple(ai[j] for j in b.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(tuple(inv))


def power(p: Permutation, n: int) -> Permutation:
    """Return ``p**n``; negative exponents are powers of the inverse."""
    if n < 0:
        p, n = inverse(p), -n
    result = identity(p.degree)
    base = p
    while n:
        if n & 1:
            result = compose(base, result)
        base = compose(base, base)
        n >>= 1
    return result


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """Return ``h^{-1} g h``."""
    _check_degrees(g, h)
    return compose(inverse(h), compose(g, h))


def commutes(a: Permutation, b: Permutation) -> bool:
    _check_degrees(a, b)
    ai, bi = a.images, b.images
    return all(ai[bi[i]] == bi[ai[i]] for i in range(len(ai)))


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """
    Return all cycles of ``p`` (1-cycles included) in canonical order:
    each cycle starts at its minimum, cycles sorted by minimum.
    """
    seen = [False] * p.degree
    cycles = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p.images[i]
        cycles.append(tuple(cycle))
    return cycles


def cycle_type(p: Permutation) -> Counter:
    """Multiset of cycle lengths, fixed points counted as length 1."""
    return Counter(len(c) for c in cycle_decomposition(p))


def num_cycles(p: Permutation) -> int:
    return len(cycle_decomposition(p))


def order(p: Permutation) -> int:
    from math import lcm

    return lcm(*(len(c) for c in cycle_decomposition(p)))


def is_free_involution(p: Permutation) -> bool:
    return all(j != i and p.images[j] == i for i, j in enumerate(p.images))


def standard_cycle(two_k: int) -> Permutation:
    """The standard ``2k``-cycle ``(0 1 ... 2k-1)``."""
    if two_k < 2 or two_k % 2:
        raise PermutationError(f"standard cycle needs an even positive degree, got {two_k}")
    return Permutation(tuple((i + 1) % two_k for i in range(two_k)))


def from_cycles(cycles, degree: int) -> Permutation:
    images = list(range(degree))
    seen = set()
    for cycle in cycles:
        for a in cycle:
            if not 0 <= a < degree:
                raise PermutationError(f"symbol {a} out of range for degree {degree}")
            if a in seen:
                raise PermutationError(f"symbol {a} repeated")
            seen.add(a)
        for a, b in zip(cycle, cycle[1:] + type(cycle)(cycle[:1])):
            images[a] = b
    return Permutation(tuple(images))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Parse disjoint-cycle notation such as ``"(0 10)(1 17)"``.

    Whitespace and commas separate symbols. Symbols that do not appear are
    fixed. Raises :class:`CycleParseError` on a repeated or out-of-range
    symbol or on unbalanced parentheses.
    """
    images = list(range(degree))
    seen = set()
    current = None
    pos = 0
    for m in _TOKEN.finditer(text):
        opening, closing, number, comma, other = m.groups()
        start = m.start(m.lastindex)
        pos = m.end()
        if opening:
            if current is not None:
                raise CycleParseError("nested '('", "(", start)
            current = []
        elif closing:
            if current is None:
                raise CycleParseError("unmatched ')'", ")", start)
            for a, b in zip(current, current[1:] + current[:1]):
                images[a] = b
            current = None
        elif number:
            if current is None:
                raise CycleParseError("symbol outside a cycle", number, start)
            a = int(number)
            if a >= degree:
                raise CycleParseError(f"symbol not below degree {degree}", number, start)
            if a in seen:
                raise CycleParseError("repeated symbol", number, start)
            seen.add(a)
            current.append(a)
        elif comma:
            if current is None:
                raise CycleParseError("separator outside a cycle", ",", start)
        else:
            raise CycleParseError("unexpected character", other, start)
    if text[pos:].strip():
        raise CycleParseError("trailing garbage", text[pos:].strip(), pos)
    if current is not None:
        raise CycleParseError("unclosed '('", "(", len(text))
    return Permutation(tuple(images))


def format_cycles(p: Permutation, fixed_points: bool = False) -> str:
    """Canonical cycle notation; ``fixed_points=True`` also prints 1-cycles."""
    cycles = [c for c in cycle_decomposition(p) if fixed_points or len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
