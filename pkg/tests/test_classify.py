from collections import Counter
from math import gcd

import pytest
from hypothesis import given, strategies as st

from unimap.autgroup import aut_period
from unimap.classify import (
    ACCOLA_MACLACHLAN,
    AUT_EQUALS_MAP_AUT,
    KLEIN_QUARTIC,
    KULKARNI,
    NON_HYPERBOLIC,
    WIMAN_I,
    WIMAN_II,
    WIMAN_III,
    Z2_SEMIDIRECT,
    ClassifyError,
    classify_edge_transitive,
    classify_map,
    classify_regular,
    edge_transitive_datum,
    edge_transitive_map,
    scan,
)
from unimap.maps import face_circuits, profile
from unimap.riemann import sig, table1_matches


def shifts(k):
    return [t for t in range(k) if not (k % 2 and 2 * t == k - 1)]


def test_datum_examples():
    d = edge_transitive_datum(7, 2)
    assert (d.l1, d.l2, d.genus) == (7, 7, 3)
    assert d.signature == sig(7, 7, 7) and d.vector.entries == (1, 2, 4)
    d = edge_transitive_datum(12, 3)
    assert d.signature == sig(12, 4, 3) and d.vector.entries == (1, 3, 8) and d.genus == 3
    d = edge_transitive_datum(4, 1)
    assert d.signature == sig(4, 4, 2) and d.genus == 1
    d = edge_transitive_datum(5, 0)
    assert d.degenerate and d.genus == 0 and d.signature == sig(5, 5)


def test_datum_rejects_regular_shift():
    with pytest.raises(ClassifyError, match="regular"):
        edge_transitive_datum(7, 3)
    with pytest.raises(ClassifyError):
        edge_transitive_datum(7, 7)


@pytest.mark.parametrize("k", range(2, 30))
def test_realized_map_is_edge_transitive(k):
    for t in shifts(k):
        m = edge_transitive_map(k, t)
        assert aut_period(m) == 2
        faces = Counter(len(c) for c in face_circuits(m))
        want = Counter()
        want[k // gcd(t, k)] += gcd(t, k)
        want[k // gcd(t + 1, k)] += gcd(t + 1, k)
        assert faces == want


def test_regular_examples():
    c = classify_regular(3)
    assert c.verdict == NON_HYPERBOLIC and c.genus == 1
    assert any("e^{2 pi i/3}" in n for n in c.notes)
    c = classify_regular(2)
    assert c.genus == 1 and any(n.endswith("modulus i") for n in c.notes)
    c = classify_regular(5)
    assert c.verdict == WIMAN_I and c.genus == 2
    assert c.aut_surface.order == 10 and c.signature == sig(10, 5, 2)
    c = classify_regular(8)
    assert c.verdict == WIMAN_II and c.genus == 4
    assert c.aut_surface.name == "SD32"
    assert c.extension_chain[0].sigma_prime == sig(2, 16, 4)


def test_klein():
    c = classify_edge_transitive(7, 2)
    assert c.verdict == KLEIN_QUARTIC
    assert (c.aut_surface.name, c.aut_surface.order) == ("PSL2(7)", 168)
    assert c.label == "KleinQuartic(b=2)"


def test_wiman_i_edge_transitive():
    c = classify_edge_transitive(7, 1)
    assert c.verdict == WIMAN_I and c.genus == 3 and c.aut_surface.name == "Z14"


def test_kulkarni():
    c = classify_edge_transitive(8, 5)
    assert c.verdict == KULKARNI and c.genus == 3
    assert c.vector.entries == (1, 5, 2)
    assert "96" in c.further_extension_note
    assert classify_edge_transitive(8, 2).verdict == KULKARNI


def test_wiman_ii_genus_two_extension():
    c = classify_edge_transitive(8, 3)
    assert c.verdict == WIMAN_II and c.aut_surface.name == "SD16"
    assert "GL2(Z3)" in c.further_extension_note
    assert any("SD16" in n for n in c.notes)


def test_index_three_notes():
    c = classify_edge_transitive(12, 7)
    assert c.verdict == Z2_SEMIDIRECT and c.genus == 4
    assert "index 3" in c.further_extension_note
    c = classify_edge_transitive(24, 19)
    assert c.genus == 10 and "index 3" in c.further_extension_note


def test_generic_curve():
    c = classify_edge_transitive(9, 2)
    assert c.verdict == AUT_EQUALS_MAP_AUT
    d = edge_transitive_datum(9, 2)
    assert c.curve_equation == f"w^9 = z^{9 // d.l1}*(z-1)^{9 // d.l2}"


def test_classify_map_dispatch():
    assert classify_map(edge_transitive_map(7, 2)).verdict == KLEIN_QUARTIC
    with pytest.raises(ClassifyError):
        from unimap.maps import OneVertexMap
        from unimap.perm import parse_cycles
        classify_map(OneVertexMap(3, parse_cycles("(0 2)(1 4)(3 5)", 6)))


SCAN3 = [
    (2, 5, 1, WIMAN_I),
    (2, 6, 1, ACCOLA_MACLACHLAN),
    (2, 8, 3, WIMAN_II),
    (3, 7, 1, WIMAN_I),
    (3, 7, 2, KLEIN_QUARTIC),
    (3, 8, 1, ACCOLA_MACLACHLAN),
    (3, 8, 5, KULKARNI),
    (3, 12, 3, WIMAN_III),
    (3, 12, 5, WIMAN_II),
]


def test_scan_three():
    got = [(c.genus, c.k, c.t, c.verdict) for c in scan(3)]
    assert got == SCAN3


def test_scan_options_add_entries():
    assert len(scan(3, include_regular=True)) > len(scan(3))
    assert all(c.verdict != NON_HYPERBOLIC for c in scan(2, include_regular=True))
    every = scan(3, include_all=True)
    assert any(c.verdict == AUT_EQUALS_MAP_AUT for c in every)


@pytest.mark.parametrize("k", range(3, 40))
def test_equivalence_invariance(k):
    for t in shifts(k):
        a = classify_edge_transitive(k, t)
        b = classify_edge_transitive(k, k - 1 - t)
        assert a.signature == b.signature
        assert (a.verdict, a.genus, a.aut_surface) == (b.verdict, b.genus, b.aut_surface)
        assert [e.case_name for e in a.extension_chain] == [e.case_name for e in b.extension_chain]


@pytest.mark.parametrize("k", range(3, 50))
def test_invariants(k):
    for t in shifts(k):
        c = classify_edge_transitive(k, t)
        c.check()
        assert c.genus == profile(edge_transitive_map(k, t)).genus
        assert c.aut_surface.order % c.aut_map_order == 0
        if c.verdict == AUT_EQUALS_MAP_AUT:
            assert c.curve_equation
        elif c.verdict != NON_HYPERBOLIC:
            names = {e.case_name for e in table1_matches(c.signature)}
            assert c.extension_chain and names
            assert {e.case_name for e in c.extension_chain} <= names
        if c.genus >= 2:
            assert k <= 4 * c.genus + 2 and k != 4 * c.genus + 1


@given(st.integers(1, 60))
def test_regular_genus(k):
    c = classify_regular(k)
    assert c.genus == (k - 1) // 2 if k % 2 else c.genus == k // 2
    assert c.aut_map_order == 2 * k
