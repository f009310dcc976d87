"""Pivots, pivot-path lengths and the closed-form metric results.

An index ``p`` in ``[-1, m+1]`` is a pivot of ``v`` when the prefix sum
``v_0 + ... + v_p`` is divisible by ``n``.  A shortest path from ``v`` to 0
that never crosses ``p`` moves every unit towards the nearer side of ``p``;
its length is ``ps_p(v)``.  The best pivot is one of the two nearest the
middle, which gives distance, eccentricity and diameter in closed form.

>>> from yoke.core import GraphParams, make_yoke_vertex
>>> v = make_yoke_vertex(GraphParams(3, 3), (2, 0, 1, 1, 2))
>>> pivot_profile(v).pivots
(-1, 2, 4)
>>> dist_to_zero_closed_form(v)
3
>>> ecc_zero_formula(GraphParams(4, 5))
12
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from .core import GraphParams, Kind, Vertex, YokeVertex, make_yoke_vertex
from .errors import KindMismatch, NotAPivot, OutOfRegime
from .search import indexed_graph


@dataclass(frozen=True)
class PivotProfile:
    vertex: Vertex
    pivots: tuple[int, ...]
    p_l: int
    p_r: int
    h2: int  # twice h(v), the distance from the nearest pivot to m/2

    @property
    def h(self) -> float:
        return self.h2 / 2

    @property
    def central_interval(self) -> tuple[int, int]:
        """The index interval ``[p_l + 1, p_r]``."""
        return (self.p_l + 1, self.p_r)

    def as_dict(self) -> dict:
        return {
            "vertex": list(self.vertex.entries),
            "pivots": list(self.pivots),
            "p_l": self.p_l,
            "p_r": self.p_r,
            "h2": self.h2,
            "central_interval": list(self.central_interval),
        }


def pivots(v: Vertex) -> tuple[int, ...]:
    n, m = v.n, v.m
    out = [-1]
    total = 0
    for p in range(m + 1):
        total += v.entries[p]
        if total % n == 0:
            out.append(p)
    out.append(m + 1)
    return tuple(out)


def pivot_profile(v: Vertex) -> PivotProfile:
    piv = pivots(v)
    m = v.m
    # compare against m/2 in doubled units to stay in integers
    p_l = max(p for p in piv if 2 * p <= m)
    p_r = min(p for p in piv if 2 * p > m)
    h2 = min(abs(2 * p - m) for p in piv)
    return PivotProfile(v, piv, p_l, p_r, h2)


def pivot_path_length(v: Vertex, p: int) -> int:
    """``ps_p(v)``: units left of ``p`` travel to entry 0, the rest to entry m+1.

    Meaningful as a distance for Yoke vertices; for dYoke vertices it is the
    same formal sum.
    """
    if p not in pivots(v):
        raise NotAPivot(f"{p} is not a pivot of {v}")
    m = v.m
    e = v.entries
    return sum(i * e[i] for i in range(p + 1)) + sum(
        (m + 1 - i) * e[i] for i in range(p + 1, m + 2)
    )


class ClosedFormDistance(NamedTuple):
    distance: int
    pivot: int


def dist_to_zero_closed_form(v: YokeVertex, with_pivot: bool = False) -> int | ClosedFormDistance:
    """``d(v, 0) = min(ps_{p_l}(v), ps_{p_r}(v))``.

    With ``with_pivot=True`` also report the pivot achieving it; ties go to
    the smaller pivot.
    """
    if v.kind is not Kind.YOKE:
        raise KindMismatch("the closed form applies to Yoke vertices only")
    prof = pivot_profile(v)
    left = pivot_path_length(v, prof.p_l)
    right = pivot_path_length(v, prof.p_r)
    best = ClosedFormDistance(left, prof.p_l) if left <= right else ClosedFormDistance(right, prof.p_r)
    return best if with_pivot else best.distance


# -- eccentricity and diameter ----------------------------------------------------


def _ceil_half(x: int) -> int:
    return -(-x // 2)


@dataclass(frozen=True)
class EccFormulaInputs:
    params: GraphParams
    case: str  # "n=1", "m<=n" or "2<=n<=m"
    value: int
    d0: int | None = None
    d1: int | None = None
    h2: int | None = None  # twice h(n, m)


def ecc_formula_inputs(params: GraphParams) -> EccFormulaInputs:
    """Dispatch in the order n = 1, then m <= n, then 2 <= n <= m."""
    n, m = params.n, params.m
    if n == 1:
        return _case_n1(params)
    if m <= n:
        return _case_small_m(params)
    return _case_large_m(params)


def _case_n1(params: GraphParams) -> EccFormulaInputs:
    m = params.m
    value = comb(_ceil_half(m) + 1, 2) + comb(m // 2 + 1, 2)
    return EccFormulaInputs(params, "n=1", value)


def _case_small_m(params: GraphParams) -> EccFormulaInputs:
    n, m = params.n, params.m
    return EccFormulaInputs(params, "m<=n", n * (m + 1) // 2)


def _case_large_m(params: GraphParams) -> EccFormulaInputs:
    n, m = params.n, params.m
    d0 = comb((m + n) // 2 + 1, 2) + comb(_ceil_half(m - n) + 1, 2)
    if (m - n) % 2:
        d1 = d0 + n - _ceil_half(m + 1)
        return EccFormulaInputs(params, "2<=n<=m", max(d0, d1), d0, d1, n + 1)
    return EccFormulaInputs(params, "2<=n<=m", d0, d0, None, n)


def ecc_formula_cases(params: GraphParams) -> dict[str, int]:
    """Value of every case whose hypothesis covers ``params``.

    The cases overlap at n = 1, m <= 1 and at n = m >= 2, where they must agree.
    """
    n, m = params.n, params.m
    out = {}
    if n == 1:
        out["n=1"] = _case_n1(params).value
    if m <= n:
        out["m<=n"] = _case_small_m(params).value
    if 2 <= n <= m:
        out["2<=n<=m"] = _case_large_m(params).value
    return out


def ecc_zero_formula(params: GraphParams, kind: Kind = Kind.YOKE) -> int:
    """Eccentricity of 0; the same number for Y(n, m) and Z(n, m)."""
    del kind  # both graphs share the value
    return ecc_formula_inputs(params).value


def diameter_formula(params: GraphParams) -> int:
    """Diameter of Y(n, m), which equals the eccentricity of 0 in Z(n, m)."""
    return ecc_zero_formula(params, Kind.DYOKE)


def special_vertices(params: GraphParams) -> tuple[YokeVertex, YokeVertex | None]:
    """The candidates ``u0`` and ``u1`` realising the eccentricity when 2 <= n <= m."""
    n, m = params.n, params.m
    if not 2 <= n <= m:
        raise OutOfRegime(f"special vertices need 2 <= n <= m, got {params}")
    first = (-((m - n) // 2)) % n
    u0 = make_yoke_vertex(params, [first] + [1] * m)
    if (m - n) % 2 == 0:
        return u0, None
    mid = [1] * m
    mid[_ceil_half(m + 1) - 1] = 0
    u1 = make_yoke_vertex(params, [first] + mid)
    return u0, u1


def dist_to_zero_array(params: GraphParams) -> np.ndarray:
    """Closed-form ``d(v, 0)`` for every vertex of Y(n, m), in index order."""
    n, m = params.n, params.m
    e = indexed_graph(params, Kind.YOKE).entries
    pos = np.arange(m + 2)
    left_w = np.cumsum(e * pos, axis=1)  # sum_{i<=p} i*v_i for p = 0..m+1
    right_all = (e * (m + 1 - pos)).sum(axis=1)
    right_w = right_all[:, None] - np.cumsum(e * (m + 1 - pos), axis=1)  # sum_{i>p}
    ps = np.concatenate([right_all[:, None], left_w + right_w], axis=1)  # column p+1
    is_piv = np.concatenate(
        [np.ones((len(e), 1), dtype=bool), np.cumsum(e, axis=1) % n == 0], axis=1
    )
    idx = np.arange(-1, m + 2)
    low = idx * 2 <= m
    # p_l: last pivot in the low half; p_r: first pivot in the high half
    low_cols = np.flatnonzero(low)
    high_cols = np.flatnonzero(~low)
    pl = low_cols[len(low_cols) - 1 - np.argmax(is_piv[:, low_cols][:, ::-1], axis=1)]
    pr = high_cols[np.argmax(is_piv[:, high_cols], axis=1)]
    rows = np.arange(len(e))
    return np.minimum(ps[rows, pl], ps[rows, pr])
