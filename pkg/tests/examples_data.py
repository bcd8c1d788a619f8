"""Permutation data for the hexagonal torus map and the three one-vertex maps with three edges."""

TORUS_X = "(0 1 2)(3 4 5)(6 7 8)(9 10 11)(12 13 14)(15 16 17)(18 19 20)(21 22 23)"
TORUS_Y = "(0 10)(1 17)(2 3)(4 6)(5 13)(7 23)(8 9)(11 19)(12 22)(14 15)(16 18)(20 21)"
TORUS_FACES = "(0 3 13 22 20 11)(1 10 8 23 12 15)(2 17 18 21 7 4)(5 6 9 19 16 14)"

THREE_EDGE_Y = {
    "a": "(0 1)(2 3)(4 5)",
    "b": "(0 3)(1 4)(2 5)",
    "c": "(1 2)(3 4)(5 0)",
}
THREE_EDGE_FACES = {
    "a": [(0, 4, 2), (1,), (3,), (5,)],
    "b": [(0, 2, 4), (1, 3, 5)],
    "c": [(0,), (1, 3, 5), (2,), (4,)],
}
# The (c) map is printed with its 3-cycle against the orientation used by the other
# three prints; under that orientation the circuit is (1 5 3).
THREE_EDGE_FACES_ORIENTED = dict(THREE_EDGE_FACES, c=[(0,), (1, 5, 3), (2,), (4,)])
