"""The dominance order on integer vectors and its link to Yoke graphs.

``v`` is dominated by ``u`` when every prefix sum of ``v`` is at most the
matching prefix sum of ``u``.  The prefix-sum map :func:`chi` turns this into
the componentwise order on Z^k, so rank, meet, join and Hasse distance all
have one-line formulas.

>>> chi((1, 2, 3))
(1, 3, 6)
>>> meet_dom((1, -2, 1), (-1, 2, -1)), join_dom((1, -2, 1), (-1, 2, -1))
((-1, 0, 1), (1, 0, -1))
>>> hasse_distance_dom((0, 0), (1, -1))
1
"""

from __future__ import annotations

import enum
import itertools
from typing import Sequence

import numpy as np

from .core import GraphParams, Kind
from .errors import LengthMismatch, OutOfRegime
from .search import indexed_graph

IntVector = tuple[int, ...]


def _check_lengths(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise LengthMismatch(f"vectors have lengths {len(u)} and {len(v)}")


def chi(v: Sequence[int]) -> IntVector:
    return tuple(itertools.accumulate(int(x) for x in v))


def chi_inv(s: Sequence[int]) -> IntVector:
    return tuple(int(b) - int(a) for a, b in zip((0, *s[:-1]), s))


def dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when ``v`` is below ``u`` in the dominance order."""
    _check_lengths(u, v)
    return all(a >= b for a, b in zip(chi(u), chi(v)))


def rank_dom(v: Sequence[int]) -> int:
    return sum(chi(v))


def hasse_distance_dom(u: Sequence[int], v: Sequence[int]) -> int:
    _check_lengths(u, v)
    return sum(abs(a - b) for a, b in zip(chi(u), chi(v)))


def meet_dom(u: Sequence[int], v: Sequence[int]) -> IntVector:
    _check_lengths(u, v)
    return chi_inv([min(a, b) for a, b in zip(chi(u), chi(v))])


def join_dom(u: Sequence[int], v: Sequence[int]) -> IntVector:
    _check_lengths(u, v)
    return chi_inv([max(a, b) for a, b in zip(chi(u), chi(v))])


def modular_distance_identity_check(u: Sequence[int], v: Sequence[int]) -> bool:
    """Hasse distance equals rank(join) - rank(meet)."""
    return hasse_distance_dom(u, v) == rank_dom(join_dom(u, v)) - rank_dom(meet_dom(u, v))


def cover_generators(k: int) -> list[IntVector]:
    """The steps ``±(e_i - e_{i+1})`` and ``±e_k`` joining covering pairs."""
    gens = []
    for i in range(k - 1):
        g = [0] * k
        g[i], g[i + 1] = 1, -1
        gens += [tuple(g), tuple(-x for x in g)]
    last = [0] * k
    last[-1] = 1
    gens += [tuple(last), tuple(-x for x in last)]
    return gens


def box_bfs_distance(u: Sequence[int], v: Sequence[int], pad: int = 0) -> int:
    """Distance from ``u`` to ``v`` in the Cayley graph on the cover steps.

    The search is confined to vectors whose prefix sums lie in the box spanned
    by those of ``u`` and ``v``, widened by ``pad`` on every side.  Vectors are
    stored on a dense grid addressed by their prefix sums; each generator acts
    on that grid as translation by its own prefix-sum image.
    """
    _check_lengths(u, v)
    cu, cv = np.array(chi(u)), np.array(chi(v))
    lo = np.minimum(cu, cv) - pad
    shape = tuple(int(x) for x in np.maximum(cu, cv) + pad - lo + 1)
    steps = [np.array(chi(g)) for g in cover_generators(len(u))]
    seen = np.zeros(shape, dtype=bool)
    frontier = np.zeros(shape, dtype=bool)
    frontier[tuple(cu - lo)] = True
    goal = tuple(cv - lo)
    dist = 0
    while frontier.any():
        if frontier[goal]:
            return dist
        seen |= frontier
        nxt = np.zeros(shape, dtype=bool)
        for step in steps:
            nxt |= _translate(frontier, step)
        frontier = nxt & ~seen
        dist += 1
    raise AssertionError("target unreachable inside its own bounding box")


def _translate(grid: np.ndarray, step: np.ndarray) -> np.ndarray:
    out = np.zeros_like(grid)
    src, dst = [], []
    for size, d in zip(grid.shape, step):
        d = int(d)
        if abs(d) >= size:
            return out
        src.append(slice(max(0, -d), size - max(0, d)))
        dst.append(slice(max(0, d), size - max(0, -d)))
    out[tuple(dst)] = grid[tuple(src)]
    return out


# -- intervals in P_n x P_2^m -------------------------------------------------------


class Interval(enum.Enum):
    I0 = "I0"
    I1 = "I1"
    BOTH = "both"


def _check_regime(params: GraphParams) -> None:
    if not 2 <= params.m <= params.n:
        raise OutOfRegime(f"interval machinery needs 2 <= m <= n, got {params}")


def interval_membership(v: Sequence[int], params: GraphParams) -> Interval:
    """Classify a box element ``(v_0, ..., v_m)`` by its coordinate sum."""
    _check_regime(params)
    n, m = params.n, params.m
    if len(v) == m + 2:
        v = v[: m + 1]
    if len(v) != m + 1:
        raise LengthMismatch(f"expected {m + 1} entries, got {len(v)}")
    s = sum(v)
    low, high = s <= n, s >= m - 1
    if low and high:
        return Interval.BOTH
    if low:
        return Interval.I0
    if high:
        return Interval.I1
    raise AssertionError("I0 and I1 cover the box when 2 <= m <= n")


def interval_map(v: Sequence[int], n: int) -> IntVector:
    """``tau(phi(v))`` on truncated vertices: ``(-(v_0+1) mod n, 1-v_1, ..., 1-v_m)``."""
    return ((-(v[0] + 1)) % n, *(1 - x for x in v[1:]))


def interval_isomorphism_check(params: GraphParams) -> bool:
    """Exhaustively check that ``tau o phi`` maps Y[I0] isomorphically onto Y[I1]."""
    _check_regime(params)
    n, m = params.n, params.m
    g = indexed_graph(params, Kind.YOKE)
    trunc = [tuple(int(x) for x in row[: m + 1]) for row in g.entries]
    sums = np.array([sum(t) for t in trunc])
    in0 = sums <= n
    in1 = sums >= m - 1
    index = {t: i for i, t in enumerate(trunc)}
    image = {}
    for i in np.flatnonzero(in0):
        j = index[interval_map(trunc[i], n)]
        if not in1[j]:
            return False
        image[int(i)] = j
    if sorted(image.values()) != sorted(np.flatnonzero(in1).tolist()):
        return False
    edges0 = _induced_edges(g.table, in0)
    edges1 = _induced_edges(g.table, in1)
    mapped = {frozenset((image[a], image[b])) for a, b in map(tuple, edges0)}
    return mapped == edges1


def _induced_edges(table: np.ndarray, mask: np.ndarray) -> set[frozenset[int]]:
    out = set()
    for a in np.flatnonzero(mask):
        for b in table[a]:
            if b >= 0 and mask[b]:
                out.add(frozenset((int(a), int(b))))
    return out


def rank_mod_steps(params: GraphParams) -> list[int]:
    """Rank change modulo n(m+1) across every edge, read on truncated vertices."""
    n, m = params.n, params.m
    g = indexed_graph(params, Kind.YOKE)
    ranks = np.array([rank_dom(row[: m + 1]) for row in g.entries])
    steps = []
    for a in range(g.size):
        for b in g.table[a]:
            if b > a:
                steps.append(int((ranks[b] - ranks[a]) % (n * (m + 1))))
    return steps
