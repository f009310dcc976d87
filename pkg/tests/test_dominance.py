from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yoke.core import GraphParams
from yoke.dominance import (
    Interval,
    box_bfs_distance,
    chi,
    chi_inv,
    cover_generators,
    dominates,
    hasse_distance_dom,
    interval_isomorphism_check,
    interval_map,
    interval_membership,
    join_dom,
    meet_dom,
    modular_distance_identity_check,
    rank_dom,
    rank_mod_steps,
)
from yoke.errors import LengthMismatch, OutOfRegime


def vectors(k):
    return st.tuples(*[st.integers(-3, 3)] * k)


pairs = st.integers(1, 5).flatmap(lambda k: st.tuples(vectors(k), vectors(k), vectors(k)))


def test_chi_examples():
    assert chi((1, 2, 3)) == (1, 3, 6)
    assert chi((1, -1, 0)) == (1, 0, 0)
    assert chi_inv((1, 3, 6)) == (1, 2, 3)


def test_dominates_examples():
    assert dominates((1, 0), (0, 1))
    assert dominates((2, -1, 4), (2, -1, 4))
    assert not dominates((-1, 2), (1, -2)) and not dominates((1, -2), (-1, 2))
    with pytest.raises(LengthMismatch):
        dominates((1,), (1, 2))


def test_rank_examples():
    n, m = 5, 3
    assert rank_dom((n - 1, 1) + (0,) * (m - 1)) == n * (m + 1) - 1
    assert rank_dom((0, 0, 0)) == 0
    assert rank_dom((1, 0, 0)) == 3


def test_distance_examples():
    assert hasse_distance_dom((0, 0), (1, -1)) == 1
    assert hasse_distance_dom((3, 1), (3, 1)) == 0
    with pytest.raises(LengthMismatch):
        hasse_distance_dom((0,), (0, 0))


def test_meet_join_examples():
    assert meet_dom((1, 0), (0, 1)) == (0, 1)
    assert join_dom((1, 0), (0, 1)) == (1, 0)
    assert meet_dom((1, -2, 1), (-1, 2, -1)) == (-1, 0, 1)
    assert join_dom((1, -2, 1), (-1, 2, -1)) == (1, 0, -1)
    assert modular_distance_identity_check((1, -2, 1), (-1, 2, -1))


@settings(max_examples=300, deadline=None)
@given(pairs)
def test_lattice(triple):
    s, t, u = triple
    meet, join = meet_dom(s, t), join_dom(s, t)
    assert dominates(s, meet) and dominates(t, meet)
    assert dominates(join, s) and dominates(join, t)
    if dominates(s, u) and dominates(t, u):
        assert dominates(meet, u)
    if dominates(u, s) and dominates(u, t):
        assert dominates(u, join)
    assert rank_dom(meet) + rank_dom(join) == rank_dom(s) + rank_dom(t)
    assert modular_distance_identity_check(s, t)
    assert dominates(s, t) == all(a >= b for a, b in zip(chi(s), chi(t)))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.tuples(vectors(k), vectors(k))))
def test_box_bfs_matches_formula(pair):
    s, t = pair
    d = hasse_distance_dom(s, t)
    assert box_bfs_distance(s, t) == d


def test_padding_does_not_change_distance():
    s, t = (1, -2, 1, 0), (-1, 2, -1, 1)
    d = hasse_distance_dom(s, t)
    assert box_bfs_distance(s, t, pad=d) == box_bfs_distance(s, t) == d


def test_covers_change_rank_by_one():
    for k in range(1, 6):
        for g in cover_generators(k):
            assert abs(rank_dom(g)) == 1


def test_interval_membership():
    p = GraphParams(4, 3)
    assert interval_membership((0, 0, 0, 0), p) is Interval.I0
    assert interval_membership((3, 1, 1, 1), p) is Interval.I1
    assert interval_membership((0, 1, 1, 0), p) is Interval.BOTH
    assert interval_membership((0, 1, 1, 0, 2), p) is Interval.BOTH
    with pytest.raises(OutOfRegime):
        interval_membership((0, 0, 0, 0, 0), GraphParams(3, 4))
    with pytest.raises(LengthMismatch):
        interval_membership((0, 0), p)


def test_interval_map():
    assert interval_map((0, 0, 0, 0), 4) == (3, 1, 1, 1)


@pytest.mark.parametrize("n,m", [(4, 2), (3, 3), (5, 2), (2, 2), (6, 4), (8, 5)])
def test_interval_isomorphism(n, m):
    assert interval_isomorphism_check(GraphParams(n, m))


def test_interval_regime():
    with pytest.raises(OutOfRegime):
        interval_isomorphism_check(GraphParams(2, 3))


@pytest.mark.parametrize("n,m", [(3, 2), (3, 3), (5, 3), (6, 4)])
def test_rank_steps_along_edges(n, m):
    steps = Counter(rank_mod_steps(GraphParams(n, m)))
    big = n * (m + 1)
    assert set(steps) <= {1, big - 1}
