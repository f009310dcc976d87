import pytest

from yoke.core import GraphParams, Kind, enumerate_vertices, make_yoke_vertex, vertex_from_index
from yoke.errors import (
    IllegalFlip,
    InvalidCaterpillar,
    InvalidTriangulation,
    NotAPermutation,
    NotArcPermutation,
    OutOfRegime,
)
from yoke.families.arcperm import (
    arcperm_flip_edges,
    arcperm_to_yoke,
    enumerate_arcperms,
    format_perm,
    is_arc_permutation,
    parse_perm,
    yoke_to_arcperm,
)
from yoke.families.caterpillar import (
    Caterpillar,
    caterpillar_flip_edges,
    caterpillar_ordering,
    caterpillar_to_yoke,
    caterpillar_to_yoke_complemented,
    enumerate_caterpillars,
    yoke_to_caterpillar,
    yoke_to_caterpillar_complemented,
)
from yoke.families.ctft import (
    ColoredTriangulation,
    ctft_flip,
    ctft_flip_edges,
    ctft_to_yoke,
    enumerate_ctft,
    yoke_to_ctft,
)
from yoke.search import indexed_graph

EXAMPLE_T = ColoredTriangulation(8, ((0, 6), (1, 6), (2, 6), (2, 5), (3, 5)))
EXAMPLE_C = Caterpillar(8, ((7, 0), (0, 1), (1, 2), (0, 5), (0, 4), (1, 3), (0, 6)))


def yoke_edges(params):
    g = indexed_graph(params, Kind.YOKE)
    return {
        frozenset((vertex_from_index(params, a), vertex_from_index(params, int(b))))
        for a in range(g.size)
        for b in g.table[a]
        if b >= 0
    }


def image_edges(edges, fwd):
    return {frozenset(fwd(x) for x in e) for e in edges}


# -- triangulations ----------------------------------------------------------------


def test_ctft_example():
    assert ctft_to_yoke(EXAMPLE_T).entries == (7, 1, 1, 0, 1, 6)
    assert yoke_to_ctft(make_yoke_vertex(GraphParams(8, 4), (7, 1, 1, 0, 1, 6))) == EXAMPLE_T


def test_ctft_flip_example():
    flipped = ctft_flip(EXAMPLE_T, 2)
    assert ctft_to_yoke(flipped).entries == (7, 1, 0, 1, 1, 6)
    assert ctft_flip(flipped, 2) == EXAMPLE_T


def test_ctft_invalid():
    with pytest.raises(InvalidTriangulation):
        ColoredTriangulation(8, ((0, 6), (2, 6), (1, 6), (2, 5), (3, 5)))
    with pytest.raises(OutOfRegime):
        ColoredTriangulation(4, ((0, 2),))
    with pytest.raises(IllegalFlip):
        ctft_flip(EXAMPLE_T, 9)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_ctft_isomorphism(n):
    p = GraphParams(n, n - 4)
    objs = enumerate_ctft(n)
    assert len(objs) == n * 2 ** (n - 4) == p.vertex_count(Kind.YOKE)
    assert {ctft_to_yoke(T) for T in objs} == set(enumerate_vertices(p))
    assert all(yoke_to_ctft(ctft_to_yoke(T)) == T for T in objs)
    assert image_edges(ctft_flip_edges(n), ctft_to_yoke) == yoke_edges(p)


def test_flips_keep_two_outer_triangles():
    n = 7
    for T in enumerate_ctft(n):
        for i in range(n - 3):
            try:
                U = ctft_flip(T, i)
            except IllegalFlip:
                continue
            outer = [t for t in U.triangles() if sum((t[j] - t[j - 1]) % n in (1, n - 1) for j in range(3)) == 2]
            assert len(outer) == 2


# -- arc permutations ----------------------------------------------------------------


def test_arcperm_examples():
    assert is_arc_permutation(parse_perm("3421576"))
    assert not is_arc_permutation(parse_perm("5643127"))
    assert is_arc_permutation(tuple(range(1, 8)))
    assert arcperm_to_yoke((4, 3, 2, 1)).entries == (3, 0, 0, 1)
    assert arcperm_to_yoke((1, 4, 3, 2)).entries == (0, 0, 0, 0)
    assert arcperm_to_yoke((2, 3, 4, 1)).entries == (1, 1, 1, 1)
    assert yoke_to_arcperm(make_yoke_vertex(GraphParams(4, 2), (3, 0, 0, 1))) == (4, 3, 2, 1)


def test_perm_text():
    assert format_perm((4, 3, 2, 1)) == "4321"
    assert format_perm(tuple(range(1, 11))) == "1,2,3,4,5,6,7,8,9,10"
    assert parse_perm("1,2,3,4,5,6,7,8,9,10") == tuple(range(1, 11))


def test_arcperm_errors():
    with pytest.raises(NotAPermutation):
        is_arc_permutation((1, 1, 2))
    with pytest.raises(NotArcPermutation):
        arcperm_to_yoke(parse_perm("5643127"))
    with pytest.raises(OutOfRegime):
        yoke_to_arcperm(make_yoke_vertex(GraphParams(4, 1), (0, 0)))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_arcperm_isomorphism(n):
    p = GraphParams(n, n - 2)
    objs = enumerate_arcperms(n)
    assert len(objs) == n * 2 ** (n - 2)
    assert {arcperm_to_yoke(x) for x in objs} == set(enumerate_vertices(p))
    assert all(yoke_to_arcperm(arcperm_to_yoke(x)) == x for x in objs)
    assert image_edges(arcperm_flip_edges(n), arcperm_to_yoke) == yoke_edges(p)


# -- caterpillars ----------------------------------------------------------------------


def test_caterpillar_examples():
    assert caterpillar_ordering(EXAMPLE_C) == (7, 6, 5, 4, 1, 3)
    assert caterpillar_to_yoke(EXAMPLE_C).entries == (7, 1, 1, 1, 0, 1, 5)
    assert yoke_to_caterpillar(caterpillar_to_yoke(EXAMPLE_C)) == EXAMPLE_C


def test_all_right_steps():
    v = make_yoke_vertex(GraphParams(6, 3), (2, 0, 0, 0))
    C = yoke_to_caterpillar(v)
    assert caterpillar_ordering(C) == (2, 4, 5, 0)


def test_caterpillar_invalid():
    with pytest.raises(InvalidCaterpillar):
        Caterpillar(6, ((0, 3), (1, 4), (2, 5), (0, 1), (4, 5)))
    with pytest.raises(OutOfRegime):
        Caterpillar(3, ((0, 1), (1, 2)))


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_caterpillar_bijection(n):
    p = GraphParams(n, n - 3)
    objs = enumerate_caterpillars(n)
    assert len(objs) == n * 2 ** (n - 3)
    for fwd, back in ((caterpillar_to_yoke, yoke_to_caterpillar),
                      (caterpillar_to_yoke_complemented, yoke_to_caterpillar_complemented)):
        assert {fwd(C) for C in objs} == set(enumerate_vertices(p))
        assert all(back(fwd(C)) == C for C in objs)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_complemented_caterpillar_edges(n):
    got = image_edges(caterpillar_flip_edges(n), caterpillar_to_yoke_complemented)
    assert got == yoke_edges(GraphParams(n, n - 3))


@pytest.mark.xfail(strict=True, reason="with 1 for a left step, h does not carry slides onto Yoke edges")
@pytest.mark.parametrize("n", [4, 6, 8])
def test_literal_caterpillar_edges(n):
    got = image_edges(caterpillar_flip_edges(n), caterpillar_to_yoke)
    assert got == yoke_edges(GraphParams(n, n - 3))
