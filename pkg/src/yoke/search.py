"""Breadth-first search over whole Yoke and dYoke graphs.

Two independent engines live here.  :func:`reference_bfs` walks the graph one
vertex at a time through :func:`yoke.core.neighbors`.  The indexed engine
(:class:`IndexedGraph`) builds a numpy neighbour table in one shot and hands
a CSR adjacency matrix to :mod:`scipy.sparse.csgraph`; it is what the public
functions use, and the test-suite checks both against each other.

>>> from yoke.core import GraphParams, make_yoke_vertex, Kind
>>> p = GraphParams(3, 3)
>>> bfs_distance(make_yoke_vertex(p, (2, 0, 1, 1, 2)), make_yoke_vertex(p, (0, 0, 0, 0)))
3
>>> bfs_diameter(p)
6
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .core import (
    Direction,
    GraphParams,
    Kind,
    Move,
    Vertex,
    check_cap,
    check_same_params,
    enumerate_vertices,
    neighbors,
    vertex_from_index,
    vertex_index,
    zero,
)
from .errors import KindMismatch

# floats per distance block handed to scipy; bounds peak memory near 128 MB
_BLOCK = 1 << 24


@dataclass(frozen=True)
class DistanceTable(Mapping):
    """Single-source distances, indexed by vertex.

    Behaves as a read-only mapping ``vertex -> distance``; the raw array is
    available as :attr:`array` (position = :func:`yoke.core.vertex_index`).
    """

    source: Vertex
    array: np.ndarray = field(repr=False)

    def __getitem__(self, v: Vertex) -> int:
        check_same_params(self.source, v)
        if v.kind is not self.source.kind:
            raise KindMismatch("vertex kind differs from the table's graph")
        return int(self.array[vertex_index(v)])

    def __iter__(self) -> Iterator[Vertex]:
        return enumerate_vertices(self.source.params, self.source.kind, cap=len(self.array))

    def __len__(self) -> int:
        return len(self.array)

    def eccentricity(self) -> int:
        return int(self.array.max())

    def farthest(self) -> list[Vertex]:
        far = np.flatnonzero(self.array == self.array.max())
        p, k = self.source.params, self.source.kind
        return [vertex_from_index(p, int(i), k) for i in far]


# -- indexed engine ----------------------------------------------------------------


class IndexedGraph:
    """Whole-graph arrays for Y(n, m) or Z(n, m).

    ``entries[i]`` is the vertex with index ``i``.  ``moves[i, 2*j + d]`` is the
    index reached from vertex ``i`` by the move ``(j, d)``, or ``-1`` when the
    move is illegal or a loop.  ``table`` is the same with parallel edges
    merged into their first column.
    """

    def __init__(self, params: GraphParams, kind: Kind = Kind.YOKE) -> None:
        self.params = params
        self.kind = kind
        self.size = check_cap(params, kind)
        self.entries = _all_entries(params, kind)
        self.moves = _move_table(self.entries, params, kind)
        self.table = _dedupe(self.moves)

    @functools.cached_property
    def adjacency(self) -> csr_matrix:
        rows = np.repeat(np.arange(self.size, dtype=np.int64), self.table.shape[1])
        cols = self.table.ravel().astype(np.int64)
        keep = cols >= 0
        data = np.ones(int(keep.sum()), dtype=np.int8)
        return csr_matrix((data, (rows[keep], cols[keep])), shape=(self.size, self.size))

    @property
    def zero_index(self) -> int:
        # (0, -1, ..., -1) comes first in Z(n, m); the zero vertex does not
        return vertex_index(zero(self.params, self.kind))

    def distances_to_zero(self) -> np.ndarray:
        return self.distances(self.zero_index)

    def distances(self, sources: np.ndarray | list[int] | int) -> np.ndarray:
        """Distance rows for ``sources``; unreachable entries are -1."""
        d = shortest_path(self.adjacency, method="D", unweighted=True, indices=sources)
        out = np.where(np.isinf(d), -1, d).astype(np.int64)
        return out

    def eccentricities(self, sources: np.ndarray | None = None) -> np.ndarray:
        """Eccentricity of each source, processed in memory-bounded blocks."""
        if sources is None:
            sources = np.arange(self.size)
        sources = np.asarray(sources, dtype=np.int64)
        batch = max(1, _BLOCK // max(1, self.size))
        ecc = np.empty(len(sources), dtype=np.int64)
        for start in range(0, len(sources), batch):
            block = self.distances(sources[start : start + batch])
            if (block < 0).any():
                raise RuntimeError(f"{self.kind.value} graph {self.params} is disconnected")
            ecc[start : start + batch] = block.max(axis=1)
        return ecc

    def degrees(self) -> np.ndarray:
        return (self.table >= 0).sum(axis=1)


def _all_entries(params: GraphParams, kind: Kind) -> np.ndarray:
    n, m = params.n, params.m
    base = kind.base
    offset = 0 if kind is Kind.YOKE else 1
    idx = np.arange(params.vertex_count(kind), dtype=np.int64)
    ent = np.empty((len(idx), m + 2), dtype=np.int64)
    rest = idx.copy()
    for j in range(m, 0, -1):
        ent[:, j] = rest % base - offset
        rest //= base
    ent[:, 0] = rest
    ent[:, m + 1] = (-ent[:, : m + 1].sum(axis=1)) % n
    return ent


def encode_entries(ent: np.ndarray, params: GraphParams, kind: Kind) -> np.ndarray:
    base = kind.base
    offset = 0 if kind is Kind.YOKE else 1
    idx = ent[:, 0].copy()
    for j in range(1, params.m + 1):
        idx = idx * base + (ent[:, j] + offset)
    return idx


def _move_table(ent: np.ndarray, params: GraphParams, kind: Kind) -> np.ndarray:
    n, m = params.n, params.m
    lo, hi = kind.middle_values[0], kind.middle_values[-1]
    own = np.arange(len(ent), dtype=np.int64)
    cols = []
    for i in range(m + 1):
        for d in Direction:
            new = ent.copy()
            new[:, i] += d.sign
            new[:, i + 1] -= d.sign
            ok = np.ones(len(ent), dtype=bool)
            for j in (i, i + 1):
                if 1 <= j <= m:
                    ok &= (new[:, j] >= lo) & (new[:, j] <= hi)
                else:
                    new[:, j] %= n
            target = np.where(ok, encode_entries(np.where(ok[:, None], new, 0), params, kind), -1)
            target[target == own] = -1
            cols.append(target)
    table = np.stack(cols, axis=1)
    return table.astype(np.int32 if len(ent) < 2**31 else np.int64)


def _dedupe(moves: np.ndarray) -> np.ndarray:
    # keep only the first column reaching each target
    table = moves.copy()
    for c in range(1, table.shape[1]):
        dup = np.zeros(len(table), dtype=bool)
        for c2 in range(c):
            dup |= moves[:, c] == moves[:, c2]
        table[dup & (moves[:, c] >= 0), c] = -1
    return table


@functools.lru_cache(maxsize=16)
def indexed_graph(params: GraphParams, kind: Kind = Kind.YOKE) -> IndexedGraph:
    return IndexedGraph(params, kind)


# -- public BFS API -------------------------------------------------------------------


def bfs_from(source: Vertex) -> DistanceTable:
    """Exact distances from ``source`` to every vertex of its graph."""
    g = indexed_graph(source.params, source.kind)
    row = g.distances(vertex_index(source))
    return DistanceTable(source, row)


def bfs_distance(a: Vertex, b: Vertex) -> int:
    check_same_params(a, b)
    if a.kind is not b.kind:
        raise KindMismatch("both vertices must live in the same graph")
    return bfs_from(b)[a]


def eccentricity_of_zero(params: GraphParams, kind: Kind = Kind.YOKE) -> int:
    return bfs_from(zero(params, kind)).eccentricity()


def bfs_diameter(params: GraphParams, kind: Kind = Kind.YOKE, mode: str = "orbit") -> int:
    """Largest distance between two vertices.

    ``mode="orbit"`` (Yoke only) searches from the vertices with ``v_0 = 0``:
    bucket rotation moves every vertex into that set, so these sources see
    every eccentricity.  ``mode="naive"`` searches from every vertex.
    """
    g = indexed_graph(params, kind)
    if mode == "orbit":
        if kind is not Kind.YOKE:
            raise KindMismatch("orbit mode relies on Yoke symmetry; use mode='naive'")
        sources = np.arange(g.size // params.n)
    elif mode == "naive":
        sources = None
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return int(g.eccentricities(sources).max())


def reference_bfs(source: Vertex) -> dict[Vertex, int]:
    """Plain queue-based BFS over vertex objects; the slow cross-check."""
    check_cap(source.params, source.kind)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u, _ in neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


# -- geodesics -----------------------------------------------------------------


def geodesic_move_sets(params: GraphParams, kind: Kind = Kind.YOKE) -> dict[int, set[int]]:
    """For each vertex index, the set of move-masks used by its geodesics to 0.

    A mask has bit ``2*i + d`` set when the move ``(i, d)`` occurs in the word.
    Every geodesic is covered: the sets are built by dynamic programming over
    the predecessor DAG, where each step may be witnessed by any of the moves
    joining the two vertices.
    """
    g = indexed_graph(params, kind)
    dist = g.distances_to_zero()
    order = np.argsort(dist, kind="stable")
    sets: dict[int, set[int]] = {g.zero_index: {0}}
    for v in order[1:]:
        v = int(v)
        acc: set[int] = set()
        for c, u in enumerate(g.moves[v]):
            if u >= 0 and dist[u] == dist[v] - 1:
                bit = 1 << c
                acc.update(mask | bit for mask in sets[int(u)])
        sets[v] = acc
    return sets


def mask_moves(mask: int) -> list[Move]:
    out = []
    j = 0
    while mask >> j:
        if mask >> j & 1:
            out.append(Move(j // 2, Direction(j % 2)))
        j += 1
    return out


def iter_geodesics(v: Vertex) -> Iterator[tuple[Move, ...]]:
    """Every geodesic from ``v`` to 0, as the sequence of moves applied to ``v``.

    The number of geodesics grows fast; intended for tiny graphs.
    """
    g = indexed_graph(v.params, v.kind)
    dist = g.distances_to_zero()

    def walk(x: int) -> Iterator[tuple[Move, ...]]:
        if dist[x] == 0:
            yield ()
            return
        for c, u in enumerate(g.moves[x]):
            if u >= 0 and dist[u] == dist[x] - 1:
                for rest in walk(int(u)):
                    yield (Move(c // 2, Direction(c % 2)), *rest)

    yield from walk(vertex_index(v))


def geodesic_word(v: Vertex) -> tuple[Move, ...]:
    """One geodesic from ``v`` to 0 (first available move at each step)."""
    return next(iter_geodesics(v))
