"""
End-to-end self checks: the counting formulas against exhaustive scans, the
signature tables against exact arithmetic, and the edge-transitive face census
against the realized maps.

Each suite returns a :class:`SuiteResult`; the first counterexample is kept in
``failure``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd

from sympy import divisors

from . import census
from .autgroup import shifts_commute
from .classify import classify_edge_transitive, classify_regular, edge_transitive_datum
from .perm import is_free_involution
from .riemann import (
    classical_cyclic_actions,
    index_ratio,
    normal_form_vector,
    TABLE1_INDEX,
    rh_genus,
    table1_row,
    vector_signature,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failure: str | None = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        d = {"suite": self.name, "passed": self.passed, "checked": self.checked, "seconds": round(self.seconds, 3)}
        if self.failure:
            d["failure"] = self.failure
        return d


def _mobius_nu(nu_bar_fn, k, p):
    from sympy.functions.combinatorial.numbers import mobius

    return sum(int(mobius(e)) * nu_bar_fn(k, p // e) for e in divisors(p))


def partition_identity(kmax: int = 8, nu_bar_fn=census.nu_bar) -> SuiteResult:
    checked = 0
    for k in range(1, kmax + 1):
        total = 0
        df = census.double_factorial(2 * k - 1)
        if nu_bar_fn(k, 1) != 1:
            return SuiteResult("partition", False, checked, f"(k={k}, p=1): nu_bar_1 = {nu_bar_fn(k, 1)}")
        if nu_bar_fn(k, 2 * k) != df:
            return SuiteResult("partition", False, checked, f"(k={k}, p={2 * k}): nu_bar_2k != {df}")
        for p in divisors(2 * k):
            v = _mobius_nu(nu_bar_fn, k, p)
            checked += 1
            if v < 0 or v % p:
                return SuiteResult("partition", False, checked, f"(k={k}, p={p}): nu = {v} not a multiple of p")
            total += v
        if total != df:
            return SuiteResult("partition", False, checked, f"(k={k}, p={2 * k}): sum of nu = {total} != {df}")
    return SuiteResult("partition", True, checked)


def oracle_equality(kmax: int = 6, nu_bar_fn=census.nu_bar) -> SuiteResult:
    checked = 0
    for k in range(1, kmax + 1):
        tally = census.brute_census(k, cap=max(kmax, census.brute_cap()))
        for p, count in tally.items():
            checked += 1
            expected = _mobius_nu(nu_bar_fn, k, p)
            if count != expected:
                return SuiteResult("oracle", False, checked, f"(k={k}, p={p}): brute {count} vs formula {expected}")
    return SuiteResult("oracle", True, checked)


def generator_completeness(kmax: int = 6, nu_bar_fn=census.nu_bar) -> SuiteResult:
    checked = 0
    for k in range(1, kmax + 1):
        for p in divisors(2 * k):
            seen = set()
            emitted = 0
            for y in census.generate_commuting(k, p):
                if not is_free_involution(y) or not shifts_commute(y, p):
                    return SuiteResult("generator", False, checked, f"(k={k}, p={p}): bad involution {y}")
                seen.add(y)
                emitted += 1
            checked += emitted
            expected = nu_bar_fn(k, p)
            if emitted != len(seen) or len(seen) != expected:
                return SuiteResult(
                    "generator", False, checked,
                    f"(k={k}, p={p}): {emitted} emitted, {len(seen)} distinct, nu_bar {expected}",
                )
    return SuiteResult("generator", True, checked)


def table1_indices(kmax: int = 50) -> SuiteResult:
    checked = 0
    sweeps = {
        "N6": [dict(k=k) for k in range(4, kmax + 1)],
        "N8": [dict(k=k, u=u) for k in range(3, kmax + 1) for u in divisors(k) if u >= 2],
        "T1": [{}],
        "T4": [{}],
        "T8": [dict(k=k) for k in range(2, kmax + 1)],
        "T9": [dict(k=k) for k in range(3, kmax + 1)],
        "T10": [dict(k=k) for k in range(3, kmax + 1)],
    }
    for name, params in sweeps.items():
        for kw in params:
            row = table1_row(name, **kw)
            ratio = index_ratio(row.sigma, row.sigma_prime)
            if ratio is None:
                continue
            checked += 1
            if ratio != TABLE1_INDEX[name]:
                return SuiteResult("table1", False, checked, f"{name} {kw}: index {ratio}")
    return SuiteResult("table1", True, checked)


def _classifier_row(curve, g):
    if curve == "Wiman type I":
        return classify_regular(2 * g + 1)
    if curve == "Wiman type II":
        return classify_regular(2 * g)
    if curve == "Accola-Maclachlan":
        return classify_edge_transitive(2 * g + 2, 1)
    if curve == "Kulkarni":
        return classify_edge_transitive(2 * g + 2, g + 2)
    if curve == "Wiman type III":
        return classify_edge_transitive(12, 3)
    return classify_edge_transitive(7, 2)


def table2_reproduction(gmax: int = 10) -> SuiteResult:
    checked = 0
    for g in range(2, gmax + 1):
        for row in classical_cyclic_actions(g):
            v = normal_form_vector(row.order, row.vector[1])
            checked += 1
            where = f"{row.curve}, g={g}"
            if v.entries != row.vector:
                return SuiteResult("table2", False, checked, f"{where}: vector {v}")
            if vector_signature(v) != row.signature:
                return SuiteResult("table2", False, checked, f"{where}: signature {vector_signature(v)}")
            if rh_genus(row.order, row.signature) != g:
                return SuiteResult("table2", False, checked, f"{where}: genus {rh_genus(row.order, row.signature)}")
            c = _classifier_row(row.curve, g)
            if c.genus != g or c.vector.entries != row.vector or c.signature != row.signature:
                return SuiteResult("table2", False, checked, f"{where}: classifier gave {c.vector} {c.signature}")
    return SuiteResult("table2", True, checked)


def genus_double_check(kmax: int = 50) -> SuiteResult:
    checked = 0
    for k in range(1, kmax + 1):
        for t in range(k):
            if k % 2 and 2 * t == k - 1:
                continue
            try:
                d = edge_transitive_datum(k, t)
            except AssertionError as exc:
                return SuiteResult("genus", False, checked, f"(k={k}, t={t}): {exc}")
            checked += 1
            if d.l1 != k // gcd(t, k) or d.l2 != k // gcd(t + 1, k):
                return SuiteResult("genus", False, checked, f"(k={k}, t={t}): face valences")
    return SuiteResult("genus", True, checked)


def run_all(kmax: int = 6, nu_bar_fn=census.nu_bar) -> list[SuiteResult]:
    suites = [
        lambda: partition_identity(max(8, kmax), nu_bar_fn),
        lambda: oracle_equality(kmax, nu_bar_fn),
        lambda: generator_completeness(kmax, nu_bar_fn),
        lambda: table1_indices(),
        lambda: table2_reproduction(),
        lambda: genus_double_check(),
    ]
    results = []
    for suite in suites:
        start = time.perf_counter()
        r = suite()
        r.seconds = time.perf_counter() - start
        results.append(r)
    return results
