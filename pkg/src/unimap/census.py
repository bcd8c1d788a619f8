r"""
Counting one-vertex maps by automorphism group.

With ``x`` the standard ``2k``-cycle and ``p | 2k``, ``x**p`` splits into the
``p`` cycles ``C_j = (j, j+p, ..., j+2k-p)`` of length ``d = 2k/p``. A free
involution commuting with ``x**p`` either preserves a cycle (and then shifts
it by half its length, so ``d`` must be even) or swaps two cycles with a shift
``t`` in ``[0, d)``. That data is a :class:`CommuterSpec`.

``nu_bar(k, p)`` counts involutions commuting with ``x**p``; ``nu(k, p)``
counts those whose automorphism group is exactly ``<x**p>``, by inclusion and
exclusion over the divisors of ``p``; ``class_count(k, p) = nu(k, p) / p``.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from math import factorial, prod

from sympy import divisors, factorint
from sympy.functions.combinatorial.numbers import mobius

from .autgroup import CapExceeded, aut_period, canonical_form, shifts_commute
from .maps import OneVertexMap
from .perm import Permutation

DEFAULT_BRUTE_CAP = 7
DEFAULT_GEN_CAP = 10


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


def brute_cap() -> int:
    return _env_int("UNIMAP_BRUTE_CAP", DEFAULT_BRUTE_CAP)


def gen_cap() -> int:
    return _env_int("UNIMAP_GEN_CAP", DEFAULT_GEN_CAP)


class CensusError(ValueError):
    pass


def _check_divisor(k: int, p: int) -> int:
    if k < 1:
        raise CensusError(f"k must be positive, got {k}")
    if p < 1 or (2 * k) % p:
        raise CensusError(f"p = {p} does not divide 2k = {2 * k}")
    return 2 * k // p


@dataclass(frozen=True)
class CommuterSpec:
    k: int
    p: int
    fixed_cycles: tuple[int, ...]
    pairs: tuple[tuple[int, int, int], ...]  # (i, j, shift) with i < j

    @property
    def d(self) -> int:
        return 2 * self.k // self.p

    def validate(self):
        d = _check_divisor(self.k, self.p)
        if self.fixed_cycles and d % 2:
            raise CensusError(f"cycles of odd length {d} cannot be fixed")
        members = list(self.fixed_cycles)
        for i, j, t in self.pairs:
            if not i < j:
                raise CensusError(f"pair ({i}, {j}) must have i < j")
            if not 0 <= t < d:
                raise CensusError(f"shift {t} outside [0, {d})")
            members += [i, j]
        if sorted(members) != list(range(self.p)):
            raise CensusError(f"fixed cycles and pairs must partition 0..{self.p - 1}")


def realize(spec: CommuterSpec) -> Permutation:
    """The free involution described by ``spec``; it commutes with ``x**p``."""
    spec.validate()
    n, p, d = 2 * spec.k, spec.p, spec.d
    images = [None] * n
    for j in spec.fixed_cycles:
        for a in range(d):
            images[j + a * p] = (j + a * p + (d // 2) * p) % n
    for i, j, t in spec.pairs:
        for a in range(d):
            src, dst = i + a * p, (j + (a + t) * p) % n
            images[src] = dst
            images[dst] = src
    return Permutation(tuple(images))


def _matchings(items):
    """Perfect matchings of ``items`` in lexicographic order."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in _matchings(remaining):
            yield ((first, partner),) + tail


def generate_specs(k: int, p: int):
    """Every :class:`CommuterSpec` for ``(k, p)``: fixed-set mask ascending,
    then matchings, then shift vectors odometer-style."""
    d = _check_divisor(k, p)
    masks = range(2 ** p) if d % 2 == 0 else [0]
    for mask in masks:
        fixed = tuple(j for j in range(p) if mask >> j & 1)
        rest = [j for j in range(p) if not mask >> j & 1]
        if len(rest) % 2:
            continue
        for matching in _matchings(rest):
            for shifts in itertools.product(range(d), repeat=len(matching)):
                pairs = tuple((i, j, t) for (i, j), t in zip(matching, shifts))
                yield CommuterSpec(k, p, fixed, pairs)


def generate_commuting(k: int, p: int):
    """Yield each free involution commuting with ``x**p`` exactly once."""
    for spec in generate_specs(k, p):
        yield realize(spec)


# --- closed forms --------------------------------------------------------------


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2))


def nu_bar(k: int, p: int) -> int:
    """Number of free involutions on ``2k`` darts commuting with ``x**p``."""
    d = _check_divisor(k, p)
    q = p // 2
    if d % 2 == 0:
        return sum((d // 2) ** m * factorial(p) // (factorial(m) * factorial(p - 2 * m)) for m in range(q + 1))
    assert p % 2 == 0, "2k/p odd forces p even"
    # (d/2)^q p!/q! with d odd, kept integral
    num = d ** q * factorial(p)
    den = 2 ** q * factorial(q)
    assert num % den == 0
    return num // den


def nu_mobius(k: int, p: int) -> int:
    _check_divisor(k, p)
    return sum(int(mobius(e)) * nu_bar(k, p // e) for e in divisors(p))


def nu_inclusion_exclusion(k: int, p: int) -> int:
    """``nu_bar_p - sigma_1 + sigma_2 - ...`` over products of distinct primes of ``p``."""
    _check_divisor(k, p)
    primes = sorted(factorint(p))
    total = nu_bar(k, p)
    for i in range(1, len(primes) + 1):
        sigma_i = sum(nu_bar(k, p // prod(c)) for c in itertools.combinations(primes, i))
        total += (-1) ** i * sigma_i
    return total


def nu(k: int, p: int) -> int:
    """Number of one-vertex maps with ``k`` edges whose automorphism group is ``<x**p>``."""
    value = nu_mobius(k, p)
    assert value == nu_inclusion_exclusion(k, p)
    return value


def class_count(k: int, p: int) -> int:
    n = nu(k, p)
    if n % p:
        raise CensusError(f"nu({k}, {p}) = {n} is not divisible by {p}")
    return n // p


@dataclass(frozen=True)
class CensusRow:
    k: int
    p: int
    nu_bar: int
    nu: int
    classes: int

    def to_json(self) -> dict:
        # counts may exceed 64 bits; strings keep them exact for any JSON reader
        return {"k": self.k, "p": self.p, "nu_bar": str(self.nu_bar), "nu": str(self.nu), "classes": str(self.classes)}


def census_row(k: int, p: int) -> CensusRow:
    return CensusRow(k, p, nu_bar(k, p), nu(k, p), class_count(k, p))


def census_table(k: int) -> list[CensusRow]:
    return [census_row(k, p) for p in divisors(2 * k)]


# --- oracles -------------------------------------------------------------------


def free_involutions(n: int):
    """All free involutions on ``n`` symbols, lexicographic by matching."""
    for matching in _matchings(list(range(n))):
        images = [0] * n
        for a, b in matching:
            images[a], images[b] = b, a
        yield Permutation(tuple(images))


def brute_census(k: int, cap: int | None = None) -> dict[int, int]:
    """Tally the automorphism period of every free involution on ``2k`` darts."""
    cap = brute_cap() if cap is None else cap
    if k > cap:
        raise CapExceeded(f"k = {k} exceeds the brute-force cap {cap} (raise --brute-cap)")
    tally = Counter({p: 0 for p in divisors(2 * k)})
    for y in free_involutions(2 * k):
        tally[aut_period(OneVertexMap(k, y))] += 1
    return dict(sorted(tally.items()))


def class_representatives(k: int, p: int, cap: int | None = None) -> list[OneVertexMap]:
    """One canonical representative per equivalence class with automorphisms exactly ``<x**p>``."""
    cap = gen_cap() if cap is None else cap
    if k > cap:
        raise CapExceeded(f"k = {k} exceeds the generation cap {cap} (raise --gen-cap)")
    _check_divisor(k, p)
    reps = set()
    for y in generate_commuting(k, p):
        if any(shifts_commute(y, p // q) for q in factorint(p)):
            continue
        reps.add(canonical_form(OneVertexMap(k, y)).y)
    out = [OneVertexMap(k, y) for y in sorted(reps, key=lambda q: q.images)]
    assert all(aut_period(m) == p for m in out)
    return out

