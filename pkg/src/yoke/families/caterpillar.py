"""Geometric caterpillars and the map ``h`` onto Y(n, n-3).

A geometric caterpillar is a non-crossing spanning tree on the convex n-gon
(vertices 0..n-1, increasing clockwise) whose non-leaf vertices form an
interval.  If that interval starts at ``b``, put ``a = b - 1``.  Starting from
``[l, r] = [a, a + 1]`` the ordering ``S(C)`` extends the interval to the left
whenever ``(l - 1, r)`` is an edge and to the right otherwise; ``h`` records
``a`` followed by one bit per step (1 for left).

>>> C = Caterpillar(8, ((7, 0), (0, 1), (1, 2), (0, 5), (0, 4), (1, 3), (0, 6)))
>>> caterpillar_ordering(C)
(7, 6, 5, 4, 1, 3)
>>> caterpillar_to_yoke(C)
YokeVertex(n=8, m=5, entries=(7, 1, 1, 1, 0, 1, 5))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..core import GraphParams, YokeVertex, make_yoke_vertex
from ..errors import InvalidCaterpillar, OutOfRegime

Edge = tuple[int, int]


def _edge(a: int, b: int, n: int) -> Edge:
    a, b = a % n, b % n
    return (a, b) if a < b else (b, a)


def _crosses(e: Edge, f: Edge) -> bool:
    if len({*e, *f}) < 4:
        return False
    a, b = e
    return (a < f[0] < b) != (a < f[1] < b)


def _is_interval(values: set[int], n: int) -> bool:
    if len(values) in (0, n):
        return True
    return sum((x - 1) % n not in values for x in values) == 1


@dataclass(frozen=True)
class Caterpillar:
    """Edges stored as sorted pairs, in sorted order."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 4:
            raise OutOfRegime("caterpillars are handled for n >= 4")
        object.__setattr__(self, "edges", tuple(sorted(_edge(a, b, self.n) for a, b in self.edges)))
        _validate(self)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def spine_start(self) -> int:
        """First vertex of the non-leaf interval."""
        n = self.n
        hubs = {v for v, d in enumerate(self.degrees()) if d > 1}
        return next(v for v in sorted(hubs) if (v - 1) % n not in hubs)

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


def _validate(C: Caterpillar) -> None:
    n, edges = C.n, C.edges
    if len(edges) != n - 1 or len(set(edges)) != n - 1:
        raise InvalidCaterpillar(f"expected {n - 1} distinct edges")
    if any(a == b for a, b in edges):
        raise InvalidCaterpillar("loop edge")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            raise InvalidCaterpillar("edges contain a cycle")
        parent[ra] = rb
    for e, f in itertools.combinations(edges, 2):
        if _crosses(e, f):
            raise InvalidCaterpillar(f"edges {e} and {f} cross")
    hubs = {v for v, d in enumerate(C.degrees()) if d > 1}
    if not _is_interval(hubs, n):
        raise InvalidCaterpillar(f"non-leaf vertices {sorted(hubs)} are not an interval")


def _trace(C: Caterpillar) -> tuple[list[int], list[int]]:
    n = C.n
    edges = set(C.edges)
    a = (C.spine_start() - 1) % n
    if _edge(a, a + 1, n) not in edges:
        raise InvalidCaterpillar(f"spine does not begin with the edge ({a}, {a + 1})")
    order, bits = [a], []
    lo, hi = a, a + 1
    for _ in range(n - 3):
        if _edge(lo - 1, hi, n) in edges:
            lo -= 1
            order.append(lo % n)
            bits.append(1)
        else:
            hi += 1
            order.append(hi % n)
            bits.append(0)
    return order, bits


def caterpillar_ordering(C: Caterpillar) -> tuple[int, ...]:
    """``S(C)``: the spine start, then each vertex in the order the interval absorbs it."""
    return tuple(_trace(C)[0])


def caterpillar_to_yoke(C: Caterpillar) -> YokeVertex:
    """``h(C)``: the spine start followed by 1 for each left step, 0 for each right step.

    A bijection, but not edge-preserving at the two bucket indices; see
    :func:`caterpillar_to_yoke_complemented` for the variant that is.
    """
    return _encode(C, left_bit=1)


def caterpillar_to_yoke_complemented(C: Caterpillar) -> YokeVertex:
    """As :func:`caterpillar_to_yoke` with the bits complemented (1 for a right step).

    This variant maps edge slides exactly onto Yoke edges.
    """
    return _encode(C, left_bit=0)


def _encode(C: Caterpillar, left_bit: int) -> YokeVertex:
    order, bits = _trace(C)
    v = make_yoke_vertex(GraphParams(C.n, C.n - 3), [order[0], *(b if left_bit else 1 - b for b in bits)])
    if _decode(v, left_bit) != C:
        raise InvalidCaterpillar("edges do not follow the interval sweep")
    return v


def yoke_to_caterpillar(v: YokeVertex) -> Caterpillar:
    """Inverse of :func:`caterpillar_to_yoke`."""
    return _decode(v, left_bit=1)


def yoke_to_caterpillar_complemented(v: YokeVertex) -> Caterpillar:
    return _decode(v, left_bit=0)


def _decode(v: YokeVertex, left_bit: int) -> Caterpillar:
    # every absorbed vertex hangs from the current right end
    n, m = v.n, v.m
    if n < 4 or m != n - 3:
        raise OutOfRegime(f"h is defined on Y(n, n-3) with n >= 4, got {v.params}")
    a = v.entries[0]
    lo, hi = a, a + 1
    edges = [_edge(lo, hi, n)]
    for bit in v.entries[1 : m + 1]:
        if bit == left_bit:
            lo -= 1
            edges.append(_edge(lo, hi, n))
        else:
            hi += 1
            edges.append(_edge(hi - 1, hi, n))
    edges.append(_edge(hi, hi + 1, n))
    return Caterpillar(n, tuple(edges))


# -- native enumeration and flips -------------------------------------------------------


def _noncrossing_trees(n: int) -> list[tuple[Edge, ...]]:
    all_edges = list(itertools.combinations(range(n), 2))
    out: list[tuple[Edge, ...]] = []

    def grow(start: int, chosen: list[Edge], comp: list[int]) -> None:
        if len(chosen) == n - 1:
            out.append(tuple(chosen))
            return
        for j in range(start, len(all_edges)):
            # not enough edges left to finish
            if len(all_edges) - j < n - 1 - len(chosen):
                return
            e = all_edges[j]
            if comp[e[0]] == comp[e[1]] or any(_crosses(e, f) for f in chosen):
                continue
            old, new = comp[e[1]], comp[e[0]]
            merged = [new if c == old else c for c in comp]
            grow(j + 1, chosen + [e], merged)

    grow(0, [], list(range(n)))
    return out


@lru_cache(maxsize=8)
def enumerate_caterpillars(n: int) -> tuple[Caterpillar, ...]:
    """Every geometric caterpillar on n points, by filtering non-crossing trees."""
    out = []
    for edges in _noncrossing_trees(n):
        deg = [0] * n
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if _is_interval({v for v in range(n) if deg[v] > 1}, n):
            out.append(Caterpillar(n, edges))
    return tuple(out)


def caterpillar_flips(C: Caterpillar) -> list[Caterpillar]:
    """Slide one edge ``(x, y)`` to ``(x, y')`` along a tree edge ``(y, y')``."""
    n = C.n
    edges = set(C.edges)
    out = []
    for x, y in C.edges:
        for end, other in ((x, y), (y, x)):
            for yy in ((other + 1) % n, (other - 1) % n):
                if yy == end or _edge(other, yy, n) not in edges or _edge(end, yy, n) in edges:
                    continue
                new = (edges - {_edge(end, other, n)}) | {_edge(end, yy, n)}
                try:
                    out.append(Caterpillar(n, tuple(new)))
                except InvalidCaterpillar:
                    pass
    return out


def caterpillar_flip_edges(n: int) -> set[frozenset[Caterpillar]]:
    return {frozenset((C, D)) for C in enumerate_caterpillars(n) for D in caterpillar_flips(C)}
