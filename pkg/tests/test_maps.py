import pytest
from hypothesis import given, strategies as st

from unimap.maps import (
    DartMap,
    MapError,
    OneVertexMap,
    face_circuits,
    face_permutation,
    format_map,
    genus,
    new_dart_map,
    parse_map,
    profile,
)
from unimap.perm import Permutation, format_cycles, identity, is_free_involution, parse_cycles, standard_cycle

from examples_data import TORUS_FACES, TORUS_X, TORUS_Y, THREE_EDGE_FACES, THREE_EDGE_FACES_ORIENTED, THREE_EDGE_Y


def torus():
    return new_dart_map(parse_cycles(TORUS_X, 24), parse_cycles(TORUS_Y, 24))


def three_edge(name):
    return OneVertexMap(3, parse_cycles(THREE_EDGE_Y[name], 6))


def walk_faces(x, y):
    """Independent face walk: from dart d the next dart is y(x^-1(d))."""
    n = x.degree
    xinv = [0] * n
    for i in range(n):
        xinv[x(i)] = i
    seen, faces = set(), []
    for d in range(n):
        if d in seen:
            continue
        cyc, e = [], d
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            e = y(xinv[e])
        faces.append(len(cyc))
    return sorted(faces)


def test_torus_faces():
    assert format_cycles(face_permutation(torus())) == TORUS_FACES


def test_torus_profile():
    p = profile(torus())
    assert (p.vertices, p.edges, p.faces, p.genus) == (8, 12, 4, 1)
    assert p.map_type == (3, 6)
    assert p.uniform


@pytest.mark.parametrize("name", "abc")
def test_three_edge_faces(name):
    assert face_circuits(three_edge(name)) == THREE_EDGE_FACES_ORIENTED[name]


def test_three_edge_c_print_is_reversed_orientation():
    got = face_circuits(three_edge("c"))
    reversed_print = [(c[0],) + tuple(reversed(c[1:])) for c in THREE_EDGE_FACES["c"]]
    assert got == reversed_print
    assert sorted(map(len, got)) == [1, 1, 1, 3]


def test_three_edge_genus():
    assert [genus(three_edge(n)) for n in "abc"] == [0, 1, 0]
    p = profile(three_edge("b"))
    assert (p.vertices, p.edges, p.faces) == (1, 3, 2)


def test_single_edge():
    m = new_dart_map(identity(2), parse_cycles("(0 1)", 2))
    p = profile(m)
    assert (p.vertices, p.edges, p.faces, p.genus) == (2, 1, 1, 0)


def test_disconnected():
    with pytest.raises(MapError, match="transitive"):
        new_dart_map(parse_cycles("(0 1)", 4), parse_cycles("(0 1)(2 3)", 4))
    # y also fixes darts 0 and 1 here, which is reported first
    with pytest.raises(MapError):
        new_dart_map(parse_cycles("(0 1)", 4), parse_cycles("(2 3)", 4))


def test_not_an_involution():
    with pytest.raises(MapError):
        OneVertexMap(2, parse_cycles("(0 1 2 3)", 4))


def test_parse_and_format():
    m = parse_map("k=3; y=(0 3)(1 4)(2 5)")
    assert m == three_edge("b")
    assert parse_map(format_map(m)) == m
    t = parse_map(f"x={TORUS_X}; y={TORUS_Y}; degree=24")
    assert parse_map(format_map(t)) == t


def one_vertex_maps(max_k=7):
    def build(images):
        n = len(images)
        im = [0] * n
        for i in range(0, n, 2):
            a, b = images[i], images[i + 1]
            im[a], im[b] = b, a
        return OneVertexMap(n // 2, Permutation(tuple(im)))

    return st.integers(1, max_k).flatmap(lambda k: st.permutations(range(2 * k))).map(build)


@given(one_vertex_maps())
def test_one_vertex_invariants(m):
    p = profile(m)
    assert p.vertices == 1 and p.edges == m.k
    assert p.faces == len(walk_faces(m.x, m.y))
    assert sorted(p.face_valences) == walk_faces(m.x, m.y)
    assert sum(p.face_valences) == 2 * m.k
    assert 1 - m.k + p.faces == 2 - 2 * p.genus
    assert 0 <= p.genus <= m.k // 2
    assert is_free_involution(m.y)
    assert m.x == standard_cycle(2 * m.k)
