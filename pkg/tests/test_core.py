import itertools

import pytest

from yoke.core import (
    Direction,
    GraphParams,
    Kind,
    Move,
    apply_move,
    dyoke_neighbors,
    embed,
    enumerate_vertices,
    is_adjacent,
    make_dyoke_vertex,
    make_yoke_vertex,
    neighbors,
    parse_vertex,
    vertex_difference,
    vertex_from_index,
    vertex_index,
    yoke_neighbors,
    zero,
)
from yoke.errors import (
    MiddleEntryOutOfRange,
    ParamMismatch,
    SumNotDivisible,
    TooLarge,
    WrongLength,
    YokeError,
)


def entries(vs):
    return {v.entries for v in vs}


class TestVertices:
    def test_full_vertex(self, y33):
        assert make_yoke_vertex(y33, (2, 0, 1, 1, 2)).entries == (2, 0, 1, 1, 2)

    def test_completion(self, y33):
        assert make_yoke_vertex(y33, (2, 0, 1, 1)).entries == (2, 0, 1, 1, 2)

    def test_buckets_reduced(self, y33):
        assert make_yoke_vertex(y33, (5, 0, 1, 1, -1)).entries == (2, 0, 1, 1, 2)

    def test_middle_out_of_range(self, y33):
        with pytest.raises(MiddleEntryOutOfRange):
            make_yoke_vertex(y33, (0, 2, 0, 0, 1))

    def test_dyoke_middle_out_of_range(self, y33):
        with pytest.raises(MiddleEntryOutOfRange):
            make_dyoke_vertex(y33, (0, -2, 0, 0, 2))

    def test_sum(self, y33):
        with pytest.raises(SumNotDivisible):
            make_yoke_vertex(y33, (0, 1, 0, 0, 0))

    def test_length(self, y33):
        with pytest.raises(WrongLength):
            make_yoke_vertex(y33, (0, 1))

    def test_errors_are_value_errors(self, y33):
        with pytest.raises(ValueError):
            make_yoke_vertex(y33, (0, 1))
        assert issubclass(WrongLength, YokeError)

    def test_bad_params(self):
        with pytest.raises(ValueError):
            GraphParams(0, 3)
        with pytest.raises(ValueError):
            GraphParams(2, -1)

    def test_text_forms(self, y33):
        v = parse_vertex("2,0,1,1", y33)
        assert str(v) == "(2,0,1,1,2)"
        assert parse_vertex("(2 0 1 1 2)", y33) == v
        assert repr(v) == "YokeVertex(n=3, m=3, entries=(2, 0, 1, 1, 2))"

    def test_kinds_differ(self, y33):
        assert make_yoke_vertex(y33, (0, 0, 0, 0)) != make_dyoke_vertex(y33, (0, 0, 0, 0))


class TestNeighbors:
    def test_zero_in_y33(self, y33):
        assert entries(nb.vertex for nb in yoke_neighbors(zero(y33))) == {(2, 1, 0, 0, 0), (0, 0, 0, 1, 2)}

    def test_isolated_vertex(self):
        assert yoke_neighbors(zero(GraphParams(1, 0))) == []

    def test_parallel_moves_merge(self):
        nbs = yoke_neighbors(zero(GraphParams(2, 0)))
        assert len(nbs) == 1
        assert nbs[0].vertex.entries == (1, 1)
        assert nbs[0].moves == (Move(0, Direction.LEFT), Move(0, Direction.RIGHT))

    def test_dyoke_example(self):
        p = GraphParams(5, 3)
        u = make_dyoke_vertex(p, (3, 0, -1, 1, 2))
        found = {nb.vertex.entries: nb.moves for nb in dyoke_neighbors(u)}
        assert Move(2, Direction.LEFT) in found[(3, 0, 0, 0, 2)]
        assert Move(1, Direction.RIGHT) in found[(3, -1, 0, 1, 2)]

    def test_dyoke_bound(self):
        # entry 1 is -1 and entry 2 is 1: a right shift at 1 would push entry 2 to 2
        u = make_dyoke_vertex(GraphParams(3, 3), (0, -1, 1, 0, 0))
        assert Move(1, Direction.RIGHT) not in {mv for nb in dyoke_neighbors(u) for mv in nb.moves}

    def test_order(self, y33):
        for v in enumerate_vertices(y33):
            firsts = [nb.moves[0] for nb in neighbors(v)]
            assert firsts == sorted(firsts)

    @pytest.mark.parametrize("kind", list(Kind))
    @pytest.mark.parametrize("n,m", [(1, 0), (2, 0), (1, 1), (2, 1), (3, 2), (2, 3), (1, 3), (4, 1)])
    def test_matches_adjacency_definition(self, n, m, kind):
        vs = list(enumerate_vertices(GraphParams(n, m), kind))
        nb = {v: entries(x.vertex for x in neighbors(v)) for v in vs}
        for a, b in itertools.product(vs, repeat=2):
            assert (b.entries in nb[a]) == (a != b and is_adjacent(a, b))

    @pytest.mark.parametrize("kind", list(Kind))
    def test_reverse_move_returns(self, kind):
        for v in enumerate_vertices(GraphParams(3, 3), kind):
            for nb in neighbors(v):
                for mv in nb.moves:
                    assert apply_move(nb.vertex, mv.reverse()) == v

    @pytest.mark.parametrize("n", [3, 4, 7])
    def test_small_cycles(self, n):
        for m in (0, 1):
            for v in enumerate_vertices(GraphParams(n, m)):
                assert len(yoke_neighbors(v)) == 2


class TestEnumeration:
    @pytest.mark.parametrize("n,m,kind,count", [(3, 3, Kind.YOKE, 24), (3, 3, Kind.DYOKE, 81), (1, 1, Kind.YOKE, 2)])
    def test_counts(self, n, m, kind, count):
        assert len(list(enumerate_vertices(GraphParams(n, m), kind))) == count

    def test_lexicographic(self, y33):
        keys = [v.entries[:-1] for v in enumerate_vertices(y33)]
        assert keys == sorted(keys)

    @pytest.mark.parametrize("kind", list(Kind))
    def test_index_round_trip(self, kind):
        p = GraphParams(3, 3)
        for i, v in enumerate(enumerate_vertices(p, kind)):
            assert vertex_index(v) == i
            assert vertex_from_index(p, i, kind) == v

    def test_cap(self):
        with pytest.raises(TooLarge):
            next(enumerate_vertices(GraphParams(2, 30)))

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("YOKE_MAX_VERTICES", "10")
        with pytest.raises(TooLarge):
            next(enumerate_vertices(GraphParams(3, 3)))


class TestDifference:
    def test_examples(self, y33):
        v = make_yoke_vertex(y33, (2, 0, 1, 1, 2))
        u = make_yoke_vertex(y33, (0, 1, 1, 1, 0))
        assert vertex_difference(v, u).entries == (2, -1, 0, 0, 2)
        assert vertex_difference(v, v) == zero(y33, Kind.DYOKE)
        a = make_yoke_vertex(y33, (0, 0, 0, 1, 2))
        b = make_yoke_vertex(y33, (2, 1, 0, 0, 0))
        assert vertex_difference(a, b).entries == (1, -1, 0, 1, 2)

    def test_param_mismatch(self, y33):
        with pytest.raises(ParamMismatch):
            vertex_difference(zero(y33), zero(GraphParams(3, 2)))

    def test_embed(self, y33):
        assert embed(make_yoke_vertex(y33, (2, 0, 1, 1))).kind is Kind.DYOKE
