import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yoke.automorphisms import (
    IDENTITY,
    GroupElement,
    apply_fundamental,
    brute_force_automorphisms,
    compose,
    element_permutation,
    full_aut_structure,
    fundamental_permutation,
    generated_group_structure,
    group_elements,
    iter_distinct_elements,
    match_canonical,
    mu,
    named_vertices,
    parse_element,
    permutation_order,
    phi,
    psi,
    tau,
)
from yoke.core import (
    GraphParams,
    Kind,
    make_dyoke_vertex,
    make_yoke_vertex,
    vertex_from_index,
    vertex_index,
    zero,
)
from yoke.errors import KindMismatch, OutOfRegime, TooLarge, Unsupported
from yoke.search import indexed_graph


def test_fundamental_examples(y33):
    z = zero(y33)
    assert phi(z).entries == (1, 0, 0, 0, 2)
    assert tau(z).entries == (0, 1, 1, 1, 0)
    assert psi(make_yoke_vertex(y33, (2, 0, 1, 1, 2))).entries == (2, 1, 1, 0, 2)


def test_mu():
    p = GraphParams(5, 3)
    u = make_dyoke_vertex(p, (1, -1, 0, 1, 4))
    assert mu(u).entries == (4, 1, 0, -1, 1)
    assert mu(mu(u)) == u


def test_apply_fundamental_kinds(y33):
    with pytest.raises(KindMismatch):
        apply_fundamental("mu", zero(y33))
    with pytest.raises(KindMismatch):
        apply_fundamental("phi", zero(y33, Kind.DYOKE))
    with pytest.raises(ValueError):
        apply_fundamental("rho", zero(y33))


def _is_automorphism(perm, params, kind=Kind.YOKE):
    g = indexed_graph(params, kind)
    edges = {frozenset((a, int(b))) for a in range(g.size) for b in g.table[a] if b >= 0}
    return sorted(perm.tolist()) == list(range(g.size)) and {
        frozenset((int(perm[a]), int(perm[b]))) for a, b in map(tuple, edges)
    } == edges


@pytest.mark.parametrize("n,m", [(1, 1), (1, 3), (2, 2), (3, 3), (4, 2), (5, 4), (3, 0)])
@pytest.mark.parametrize("name", ["phi", "psi", "tau"])
def test_fundamental_maps_are_automorphisms(name, n, m):
    p = GraphParams(n, m)
    assert _is_automorphism(fundamental_permutation(name, p), p)


@pytest.mark.parametrize("n,m", [(3, 3), (2, 2), (4, 1)])
def test_mu_is_automorphism(n, m):
    p = GraphParams(n, m)
    g = indexed_graph(p, Kind.DYOKE)
    perm = np.array([vertex_index(mu(vertex_from_index(p, i, Kind.DYOKE))) for i in range(g.size)])
    assert _is_automorphism(perm, p, Kind.DYOKE)


def test_orders():
    p = GraphParams(5, 3)
    assert permutation_order(fundamental_permutation("phi", p)) == 5
    assert permutation_order(fundamental_permutation("psi", p)) == 2
    assert permutation_order(fundamental_permutation("tau", p)) == 2
    # degenerate: psi and tau fix everything on a single vertex
    assert permutation_order(fundamental_permutation("psi", GraphParams(1, 0))) == 1


def test_group_element_call_matches_permutation(y33):
    g = indexed_graph(y33, Kind.YOKE)
    el = GroupElement(2, 1, 1)
    perm = element_permutation(el, y33)
    for i in range(g.size):
        assert el(vertex_from_index(y33, i)) == vertex_from_index(y33, int(perm[i]))


def test_compose_examples():
    for n, m in [(3, 3), (4, 2), (5, 7), (1, 2)]:
        p = GraphParams(n, m)
        tp = parse_element("tau.psi", p)
        assert compose(tp, tp, p) == GroupElement(m % n, 0, 0)
        g = GroupElement(1 % n, 1, 0)
        assert compose(g, IDENTITY, p) == g
        assert compose(parse_element("psi", p), parse_element("phi", p), p) == GroupElement((n - 1) % n, 0, 1)
    with pytest.raises(OutOfRegime):
        compose(IDENTITY, IDENTITY, GraphParams(3, 0))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_compose_matches_permutations(n, m, data):
    p = GraphParams(n, m)
    els = group_elements(p)
    g = data.draw(st.sampled_from(els))
    h = data.draw(st.sampled_from(els))
    prod = compose(g, h, p)
    assert np.array_equal(element_permutation(prod, p), element_permutation(g, p)[element_permutation(h, p)])


def test_parse_element(y33):
    assert parse_element("phi^2.tau", y33) == GroupElement(2, 1, 0)
    assert parse_element("phi^-1", y33) == GroupElement(2, 0, 0)
    assert parse_element("id", y33) == IDENTITY
    assert str(GroupElement(2, 1, 1)) == "phi^2.tau.psi"
    with pytest.raises(ValueError):
        parse_element("rho", y33)


@pytest.mark.parametrize(
    "n,m,tag,order",
    [(3, 3, "D_6", 12), (2, 4, "D_2xC2", 8), (1, 4, "C2xC2", 4), (1, 0, "Trivial", 1),
     (2, 0, "C2", 2), (1, 1, "C2", 2), (5, 0, "D_5", 10), (4, 3, "D_8", 16)],
)
def test_generated_structure(n, m, tag, order):
    s = generated_group_structure(GraphParams(n, m))
    assert (s.tag, s.order) == (tag, order)


def test_distinct_elements_count():
    for n, m in [(3, 3), (2, 4), (4, 1), (5, 5)]:
        p = GraphParams(n, m)
        assert len(list(iter_distinct_elements(p))) == 4 * n == generated_group_structure(p).order


def test_full_structure():
    assert full_aut_structure(GraphParams(1, 3)).order == 16
    assert full_aut_structure(GraphParams(3, 3)).tag == "D_6"
    with pytest.raises(Unsupported):
        full_aut_structure(GraphParams(3, 2))


def test_named_vertices(y33):
    named = named_vertices(y33)
    assert named["0_1"].entries == (1, 0, 0, 0, 2)
    assert named["0_l"].entries == (2, 1, 0, 0, 0)
    assert named["1_0"] == tau(zero(y33))
    assert named["0_2"] == phi(phi(zero(y33)))


@pytest.mark.parametrize("n,m,count", [(1, 3, 16), (3, 3, 12), (6, 0, 12), (1, 4, 4), (2, 4, 8)])
def test_brute_force_counts(n, m, count):
    p = GraphParams(n, m)
    autos = brute_force_automorphisms(p)
    assert len(autos) == count
    assert all(_is_automorphism(a, p) for a in autos)


def test_brute_force_matches_canonical():
    p = GraphParams(3, 3)
    for perm in brute_force_automorphisms(p):
        assert match_canonical(perm, p) is not None


def test_y13_has_extra_automorphisms():
    p = GraphParams(1, 3)
    unmatched = [a for a in brute_force_automorphisms(p) if match_canonical(a, p) is None]
    assert len(unmatched) == 16 - 4


def test_brute_force_cap():
    with pytest.raises(TooLarge):
        brute_force_automorphisms(GraphParams(3, 3), cap=10)
