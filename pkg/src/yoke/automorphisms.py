"""Symmetries of Yoke graphs.

Three maps generate the group A(n, m):

* ``phi`` rotates the buckets: ``(v_0 + 1, v_1, ..., v_m, v_{m+1} - 1)``;
* ``psi`` reverses the sequence;
* ``tau`` complements the middle: ``(-v_0, 1 - v_1, ..., 1 - v_m, -(m + v_{m+1}))``.

Every element is ``phi^k tau^a psi^b`` (``psi`` acting first) and the product
follows from ``psi phi = phi^-1 psi``, ``tau phi = phi^-1 tau`` and
``(tau psi)^2 = phi^m``.  :func:`brute_force_automorphisms` finds the full
automorphism group independently, by backtracking.

>>> from yoke.core import GraphParams, zero
>>> p = GraphParams(3, 3)
>>> apply_fundamental("tau", zero(p))
YokeVertex(n=3, m=3, entries=(0, 1, 1, 1, 0))
>>> TAU_PSI = GroupElement(0, 1, 1)
>>> compose(TAU_PSI, TAU_PSI, p)
GroupElement(k=0, a=0, b=0)
>>> len(brute_force_automorphisms(p))
12
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import (
    Direction,
    DYokeVertex,
    GraphParams,
    Kind,
    Vertex,
    YokeVertex,
    check_cap,
    make_yoke_vertex,
    max_brute_force,
    shift,
    zero,
)
from .errors import KindMismatch, OutOfRegime, Unsupported
from .search import indexed_graph


# -- the fundamental maps -------------------------------------------------------------


def phi(v: YokeVertex) -> YokeVertex:
    n, e = v.n, v.entries
    return YokeVertex(v.params, ((e[0] + 1) % n, *e[1:-1], (e[-1] - 1) % n))


def psi(v: YokeVertex) -> YokeVertex:
    return YokeVertex(v.params, v.entries[::-1])


def tau(v: YokeVertex) -> YokeVertex:
    n, m, e = v.n, v.m, v.entries
    return YokeVertex(v.params, ((-e[0]) % n, *(1 - x for x in e[1:-1]), (-(m + e[-1])) % n))


def mu(u: DYokeVertex) -> DYokeVertex:
    n, e = u.n, u.entries
    return DYokeVertex(u.params, ((-e[0]) % n, *(-x for x in e[1:-1]), (-e[-1]) % n))


_FUNDAMENTAL = {"phi": phi, "psi": psi, "tau": tau, "mu": mu}


def apply_fundamental(name: str, v: Vertex) -> Vertex:
    try:
        f = _FUNDAMENTAL[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; expected one of {sorted(_FUNDAMENTAL)}") from None
    want = Kind.DYOKE if name == "mu" else Kind.YOKE
    if v.kind is not want:
        raise KindMismatch(f"{name} acts on {want.value} vertices")
    return f(v)  # type: ignore[arg-type]


# -- the group A(n, m) ----------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """``phi^k tau^a psi^b``; applied to a vertex, ``psi^b`` acts first."""

    k: int
    a: int
    b: int

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append("phi" if self.k == 1 else f"phi^{self.k}")
        if self.a:
            parts.append("tau")
        if self.b:
            parts.append("psi")
        return ".".join(parts) or "id"

    def __call__(self, v: YokeVertex) -> YokeVertex:
        if self.b:
            v = psi(v)
        if self.a:
            v = tau(v)
        for _ in range(self.k % v.n):
            v = phi(v)
        return v


IDENTITY = GroupElement(0, 0, 0)


def _canonical(k: int, a: int, b: int, n: int) -> GroupElement:
    return GroupElement(k % n, a % 2, b % 2)


def compose(g: GroupElement, h: GroupElement, params: GraphParams) -> GroupElement:
    """The canonical form of ``g h`` (``h`` acts first)."""
    if params.m == 0:
        raise OutOfRegime("the canonical form needs m > 0")
    return _multiply(g, h, params)


def _multiply(g: GroupElement, h: GroupElement, params: GraphParams) -> GroupElement:
    n, m = params.n, params.m
    # move phi^{h.k} to the front: tau and psi each invert it
    sign = -1 if (g.a + g.b) % 2 else 1
    k = g.k + sign * h.k
    if g.b and h.a:
        # psi tau = phi^-m tau psi
        k += (-1 if g.a else 1) * (-m)
        return _canonical(k, g.a + 1, 1 + h.b, n)
    return _canonical(k, g.a + h.a, g.b + h.b, n)


def group_elements(params: GraphParams) -> list[GroupElement]:
    return [GroupElement(k, a, b) for k in range(params.n) for a in (0, 1) for b in (0, 1)]


_FACTORS = {"phi": GroupElement(1, 0, 0), "tau": GroupElement(0, 1, 0), "psi": GroupElement(0, 0, 1)}


def parse_element(text: str, params: GraphParams) -> GroupElement:
    """Parse products such as ``"phi^2.tau.psi"`` (rightmost factor acts first).

    Also valid for m = 0, where the triple is just one name among several.
    """
    out = IDENTITY
    for token in filter(None, (t.strip() for t in re.split(r"[.*\s]+", text))):
        match = re.fullmatch(r"(phi|tau|psi|id)(?:\^(-?\d+))?", token)
        if not match:
            raise ValueError(f"cannot parse group element factor {token!r}")
        name, power = match.group(1), int(match.group(2) or 1)
        if name == "id":
            continue
        base = _FACTORS[name]
        if power < 0:
            # tau and psi are involutions; phi^-1 is phi^(n-1)
            power = power % (params.n if name == "phi" else 2)
        for _ in range(power):
            out = _multiply(out, base, params)
    return out


def element_permutation(g: GroupElement, params: GraphParams) -> np.ndarray:
    """Vertex-index permutation of ``g`` on Y(n, m)."""
    ig = indexed_graph(params, Kind.YOKE)
    e = ig.entries.copy()
    n, m = params.n, params.m
    if g.b:
        e = e[:, ::-1].copy()
    if g.a:
        e[:, 0] = (-e[:, 0]) % n
        e[:, 1 : m + 1] = 1 - e[:, 1 : m + 1]
    e[:, 0] = (e[:, 0] + g.k) % n
    return _index_of(e, params)


def _index_of(e: np.ndarray, params: GraphParams) -> np.ndarray:
    idx = e[:, 0].copy()
    for j in range(1, params.m + 1):
        idx = idx * 2 + e[:, j]
    return idx


def fundamental_permutation(name: str, params: GraphParams) -> np.ndarray:
    return element_permutation(_FACTORS[name], params)


def permutation_order(p: np.ndarray) -> int:
    x = np.arange(len(p))
    y, k = p.copy(), 1
    while not np.array_equal(y, x):
        y, k = p[y], k + 1
    return k


# -- structure ------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupStructure:
    tag: str
    order: int

    def __str__(self) -> str:
        return f"{self.tag} (order {self.order})"


def generated_group_structure(params: GraphParams) -> GroupStructure:
    """Isomorphism type of the group generated by phi, psi and tau."""
    n, m = params.n, params.m
    if m == 0:
        if n == 1:
            return GroupStructure("Trivial", 1)
        if n == 2:
            return GroupStructure("C2", 2)
        return GroupStructure(f"D_{n}", 2 * n)
    if n == 1:
        return GroupStructure("C2", 2) if m == 1 else GroupStructure("C2xC2", 4)
    if n % 2 or m % 2:
        return GroupStructure(f"D_{2 * n}", 4 * n)
    return GroupStructure(f"D_{n}xC2", 4 * n)


def full_aut_structure(params: GraphParams) -> GroupStructure:
    """Isomorphism type of the full automorphism group of Y(n, m)."""
    if params.m == 2:
        raise Unsupported("the full automorphism group is not known for m = 2")
    if (params.n, params.m) == (1, 3):
        return GroupStructure("D4xC2", 16)
    return generated_group_structure(params)


# -- named vertices ---------------------------------------------------------------------


def named_vertices(params: GraphParams) -> dict[str, YokeVertex]:
    """``0``, ``0_l``, ``0_r`` and ``0_k``, ``1_k`` for every k in [0, n-1]."""
    n, m = params.n, params.m
    z = zero(params, Kind.YOKE)
    out: dict[str, YokeVertex] = {"0": z}  # type: ignore[dict-item]
    left = shift(z, 0, Direction.RIGHT)
    right = shift(z, m, Direction.LEFT)
    if left is not None:
        out["0_l"] = left  # type: ignore[assignment]
    if right is not None:
        out["0_r"] = right  # type: ignore[assignment]
    for k in range(n):
        out[f"0_{k}"] = make_yoke_vertex(params, [k] + [0] * m)
        out[f"1_{k}"] = make_yoke_vertex(params, [k] + [1] * m)
    return out


# -- brute force ------------------------------------------------------------------------


class _DistanceRows:
    """Single-source distance rows, computed on first use."""

    def __init__(self, params: GraphParams) -> None:
        self.graph = indexed_graph(params, Kind.YOKE)
        self.rows: dict[int, np.ndarray] = {}

    def __getitem__(self, x: int) -> np.ndarray:
        row = self.rows.get(x)
        if row is None:
            row = self.rows[x] = self.graph.distances(x)
        return row

    def columns(self, xs: np.ndarray) -> np.ndarray:
        missing = [int(x) for x in xs if int(x) not in self.rows]
        if missing:
            for x, row in zip(missing, self.graph.distances(missing)):
                self.rows[x] = row
        return np.stack([self.rows[int(x)] for x in xs], axis=1)


def _initial_colors(table: np.ndarray, dist: _DistanceRows) -> np.ndarray:
    """Valency plus the distance profile to valency-2 vertices, then neighbour refinement."""
    deg = (table >= 0).sum(axis=1)
    special = np.flatnonzero(deg == 2)
    keys = [deg[:, None]]
    if 0 < len(special) < len(deg):
        keys.append(np.sort(dist.columns(special), axis=1))
    colors = _relabel(np.concatenate(keys, axis=1))
    while True:
        nb = np.where(table >= 0, colors[np.maximum(table, 0)], -1)
        refined = _relabel(np.concatenate([colors[:, None], np.sort(nb, axis=1)], axis=1))
        if refined.max() == colors.max():
            return refined
        colors = refined


def _relabel(keys: np.ndarray) -> np.ndarray:
    _, inv = np.unique(keys, axis=0, return_inverse=True)
    return inv.reshape(-1)


_HASH_MUL = 0x9E3779B97F4A7C15


def brute_force_automorphisms(params: GraphParams, cap: int | None = None) -> list[np.ndarray]:
    """Every automorphism of Y(n, m) as a vertex-index permutation, sorted.

    Individualize and refine: fix a vertex and a candidate image, split both
    sides by distance to the fixed vertices, and recurse until the colouring
    is discrete.  Each complete map is checked against the edge set.
    """
    check_cap(params, Kind.YOKE, max_brute_force() if cap is None else cap)
    g = indexed_graph(params, Kind.YOKE)
    size = g.size
    dist = _DistanceRows(params)
    width = size + 1  # exceeds every distance
    colors = _initial_colors(g.table, dist)
    nbrs = np.sort(g.table, axis=1)
    # both sides of the map side by side, for joint neighbour refinement
    twin = np.concatenate([g.table, np.where(g.table >= 0, g.table + size, -1)])
    found: list[np.ndarray] = []

    def refine(labels: np.ndarray) -> np.ndarray:
        # hashed keys: a collision only merges classes, which costs branching
        # but never loses an automorphism
        count = int(labels.max()) + 1
        while True:
            nb = np.sort(np.where(twin >= 0, labels[np.maximum(twin, 0)], -1), axis=1)
            key = labels.astype(np.uint64)
            for col in nb.T:
                key = key * np.uint64(_HASH_MUL) + (col + 1).astype(np.uint64)
            _, labels = np.unique(key, return_inverse=True)
            labels = labels.reshape(-1)
            new = int(labels.max()) + 1
            if new == count:
                return labels
            count = new

    def is_automorphism(perm: np.ndarray) -> bool:
        image = np.where(g.table >= 0, perm[np.maximum(g.table, 0)], -1)
        return bool(np.array_equal(np.sort(image, axis=1), nbrs[perm]))

    def search(dcls: np.ndarray, ccls: np.ndarray) -> None:
        k = int(dcls.max()) + 1
        dcount = np.bincount(dcls, minlength=k)
        if not np.array_equal(dcount, np.bincount(ccls, minlength=k)):
            return
        if dcount.max() == 1:
            target = np.empty(k, dtype=np.int64)
            target[ccls] = np.arange(size)
            perm = target[dcls]
            if is_automorphism(perm):
                found.append(perm)
            return
        # split the smallest non-trivial class, by its least vertex
        cls = int(np.argmin(np.where(dcount > 1, dcount, size + 1)))
        x = int(np.flatnonzero(dcls == cls)[0])
        for y in np.flatnonzero(ccls == cls):
            keys = np.concatenate([dcls * width + dist[x], ccls * width + dist[int(y)]])
            _, inv = np.unique(keys, return_inverse=True)
            inv = refine(inv.reshape(-1))
            search(inv[:size], inv[size:])

    search(colors, colors.copy())
    found.sort(key=lambda p: tuple(p))
    return found


def match_canonical(perm: np.ndarray, params: GraphParams) -> GroupElement | None:
    """The element ``phi^k tau^a psi^b`` acting as ``perm``, if any."""
    for el in group_elements(params):
        if np.array_equal(element_permutation(el, params), perm):
            return el
    return None


def iter_distinct_elements(params: GraphParams) -> Iterator[tuple[GroupElement, np.ndarray]]:
    """Canonical elements with pairwise distinct actions, first representative kept."""
    seen: set[bytes] = set()
    for el in group_elements(params):
        p = element_permutation(el, params)
        key = p.tobytes()
        if key not in seen:
            seen.add(key)
            yield el, p
