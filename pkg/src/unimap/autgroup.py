"""
Automorphism groups of one-vertex maps.

The automorphisms of a map are the permutations of darts commuting with both
``x`` and ``y``. For a one-vertex map they form the cyclic group generated by
``x**p`` where ``p`` (the *period*) is the least divisor of ``2k`` for which
``x**p`` commutes with ``y``. Maps with the same ``k`` are equivalent exactly
when their involutions are conjugate under a power of ``x``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from sympy import divisors

from .maps import OneVertexMap
from .perm import Permutation, power


class CapExceeded(ValueError):
    pass


def shifts_commute(y: Permutation, s: int) -> bool:
    """True iff ``x**s`` commutes with ``y`` (``x`` the standard cycle)."""
    n = y.degree
    yi = y.images
    return all(yi[(i + s) % n] == (yi[i] + s) % n for i in range(n))


def shift_conjugate(y: Permutation, s: int) -> Permutation:
    """``x^{-s} y x^{s}`` for the standard cycle ``x``."""
    n = y.degree
    yi = y.images
    return Permutation(tuple((yi[(i + s) % n] - s) % n for i in range(n)))


def aut_period(m: OneVertexMap) -> int:
    """Least divisor ``p`` of ``2k`` such that ``x**p`` commutes with ``y``."""
    for p in divisors(2 * m.k):
        if shifts_commute(m.y, p):
            return p
    raise AssertionError("x**(2k) is the identity and always commutes")


@dataclass(frozen=True)
class AutData:
    period: int
    order: int
    orbit: tuple[Permutation, ...]
    canonical_y: Permutation


def aut_data(m: OneVertexMap) -> AutData:
    n = 2 * m.k
    p = aut_period(m)
    if __debug__:
        # the commuting shifts form the subgroup generated by x**p
        assert all(shifts_commute(m.y, s) == (s % p == 0) for s in divisors(n))
    orbit = tuple(shift_conjugate(m.y, s) for s in range(p))
    assert len(set(orbit)) == p
    return AutData(period=p, order=n // p, orbit=orbit, canonical_y=min(orbit, key=lambda q: q.images))


def canonical_form(m: OneVertexMap) -> OneVertexMap:
    return OneVertexMap(m.k, aut_data(m).canonical_y)


def are_equivalent(m1: OneVertexMap, m2: OneVertexMap) -> bool:
    if m1.k != m2.k:
        raise ValueError(f"maps have different edge counts: {m1.k} vs {m2.k}")
    return m2.y in aut_data(m1).orbit


def is_regular(m: OneVertexMap) -> bool:
    return aut_period(m) == 1


def is_strictly_edge_transitive(m: OneVertexMap) -> bool:
    return aut_period(m) == 2


def automorphisms(m: OneVertexMap) -> set[Permutation]:
    """The group generated by ``x**p``, listed element by element."""
    p = aut_period(m)
    x = m.x
    return {power(x, p * s) for s in range(2 * m.k // p)}


DEFAULT_CENTRALIZER_CAP = 8


def brute_centralizer(m: OneVertexMap, degree_cap: int = DEFAULT_CENTRALIZER_CAP) -> set[Permutation]:
    """
    Scan the whole symmetric group on ``2k`` darts for permutations commuting
    with ``x`` and ``y``. Independent of :func:`aut_period`; used as an oracle.
    """
    n = 2 * m.k
    if n > degree_cap:
        raise CapExceeded(f"degree {n} exceeds the brute-force cap {degree_cap}")
    x = np.array(m.x.images)
    y = np.array(m.y.images)
    found = set()
    chunk = []
    for sigma in itertools.permutations(range(n)):
        chunk.append(sigma)
        if len(chunk) == 20000:
            found.update(_commuting_rows(np.array(chunk), x, y))
            chunk = []
    if chunk:
        found.update(_commuting_rows(np.array(chunk), x, y))
    return {Permutation(s) for s in found}


def _commuting_rows(sigmas, x, y):
    # sigma(x(i)) == x(sigma(i)) and likewise for y, for every dart i
    ok = (sigmas[:, x] == x[sigmas]).all(axis=1)
    ok &= (sigmas[:, y] == y[sigmas]).all(axis=1)
    return [tuple(int(v) for v in row) for row in sigmas[ok]]
