"""Exhaustive and fuzzed checks of every closed form against graph search.

Each ``check_*`` function sweeps a range of parameters and returns a
:class:`CheckResult` holding counts and the first few counterexamples.
:data:`SUITES` groups the checks for the command line.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import actions, automorphisms, dominance, pivots
from .core import GraphParams, Kind, vertex_from_index, vertex_index
from .families import arcperm, caterpillar, ctft
from .search import bfs_diameter, encode_entries, geodesic_move_sets, indexed_graph, reference_bfs

MAX_REPORTED = 5
DEFAULT_SEED = 20240611


@dataclass
class CheckResult:
    name: str
    cells: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def fail(self, message: str) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(message)

    def expect(self, condition: bool, message: str | Callable[[], str]) -> None:
        self.checks += 1
        if not condition:
            self.fail(message() if callable(message) else message)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.cells} cells, {self.checks} checks"
        if self.failure_count:
            text += f", {self.failure_count} failures"
        return text + f" ({self.elapsed:.1f}s)"

    def lines(self) -> list[str]:
        out = [self.summary()]
        out += [f"  note: {n}" for n in self.notes]
        out += [f"  counterexample: {f}" for f in self.failures]
        return out


def _timed(fn: Callable[..., CheckResult]) -> Callable[..., CheckResult]:
    def wrapper(*args, **kwargs) -> CheckResult:
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - start
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def param_grid(
    max_vertices: int, base: int = 2, min_m: int = 0, max_m: int | None = None, max_n: int | None = None
) -> Iterator[GraphParams]:
    """All ``(n, m)`` with ``n * base**m <= max_vertices``, by m then n."""
    m = min_m
    while base**m <= max_vertices and (max_m is None or m <= max_m):
        top = max_vertices // base**m
        if max_n is not None:
            top = min(top, max_n)
        for n in range(1, top + 1):
            yield GraphParams(n, m)
        m += 1


# -- metric theory ----------------------------------------------------------------------


@_timed
def check_formula_overlaps(max_n: int = 64, max_m: int = 64) -> CheckResult:
    """Where two cases of the eccentricity formula apply, they agree."""
    res = CheckResult("formula-overlaps")
    for n in range(1, max_n + 1):
        for m in range(max_m + 1):
            cases = pivots.ecc_formula_cases(GraphParams(n, m))
            if len(cases) > 1:
                res.cells += 1
                res.expect(len(set(cases.values())) == 1, f"Y({n},{m}): {cases}")
    return res


@_timed
def check_ecc_formula(max_vertices: int = 8192, max_n: int = 8, max_m: int = 9) -> CheckResult:
    """BFS eccentricity of 0 in Y(n, m) equals the closed form."""
    res = CheckResult("ecc-formula")
    for p in param_grid(max_vertices, max_n=max_n, max_m=max_m):
        res.cells += 1
        got = int(indexed_graph(p).distances_to_zero().max())
        want = pivots.ecc_zero_formula(p)
        res.expect(got == want, f"Y({p.n},{p.m}): bfs {got}, formula {want}")
    return res


@_timed
def check_diameter(
    max_vertices: int = 2048, all_pairs_vertices: int = 256, max_dyoke_vertices: int = 8192
) -> CheckResult:
    """Diameter of Y(n, m) and eccentricity of 0 in Z(n, m) equal the closed form.

    Graphs up to ``all_pairs_vertices`` use every vertex as a source; larger
    ones use one source per orbit of the bucket rotation.
    """
    res = CheckResult("diameter")
    naive = orbit = 0
    for p in param_grid(max_vertices):
        res.cells += 1
        mode = "naive" if p.vertex_count() <= all_pairs_vertices else "orbit"
        naive, orbit = (naive + 1, orbit) if mode == "naive" else (naive, orbit + 1)
        got = bfs_diameter(p, mode=mode)
        want = pivots.diameter_formula(p)
        res.expect(got == want, f"diam Y({p.n},{p.m}): bfs {got}, formula {want}")
    for p in param_grid(max_dyoke_vertices, base=3):
        res.cells += 1
        got = int(indexed_graph(p, Kind.DYOKE).distances_to_zero().max())
        want = pivots.diameter_formula(p)
        res.expect(got == want, f"ecc Z({p.n},{p.m}): bfs {got}, formula {want}")
    res.notes.append(f"Y diameters: {naive} all-pairs, {orbit} orbit-representative")
    return res


@_timed
def check_closed_form_distance(max_vertices: int = 4096, scalar_vertices: int = 256) -> CheckResult:
    """Closed-form d(v, 0) equals BFS for every vertex.

    The vectorized form covers the whole range; the per-vertex function is
    compared against it on graphs up to ``scalar_vertices``.
    """
    res = CheckResult("closed-form-distance")
    for p in param_grid(max_vertices):
        res.cells += 1
        g = indexed_graph(p)
        bfs = g.distances_to_zero()
        closed = pivots.dist_to_zero_array(p)
        bad = np.flatnonzero(bfs != closed)
        res.checks += g.size
        for i in bad:
            res.fail(f"{vertex_from_index(p, int(i))}: bfs {bfs[i]}, closed form {closed[i]}")
        if g.size <= scalar_vertices:
            for i in range(g.size):
                v = vertex_from_index(p, i)
                res.expect(
                    pivots.dist_to_zero_closed_form(v) == closed[i],
                    lambda: f"{v}: scalar and vectorized closed forms differ",
                )
    return res


@_timed
def check_difference_map(max_vertices: int = 256) -> CheckResult:
    """d_Y(v, u) = d_Z(v - u, 0) for all pairs."""
    res = CheckResult("difference-map")
    for p in param_grid(max_vertices):
        res.cells += 1
        gy = indexed_graph(p)
        gz = indexed_graph(p, Kind.DYOKE)
        dy = gy.distances(np.arange(gy.size))
        dz = gz.distances_to_zero()
        e = gy.entries
        diff = e[:, None, :] - e[None, :, :]
        diff[..., 0] %= p.n
        diff[..., -1] %= p.n
        zidx = encode_entries(diff.reshape(-1, p.m + 2), p, Kind.DYOKE).reshape(gy.size, gy.size)
        ok = dy == dz[zidx]
        res.checks += ok.size
        for a, b in zip(*np.nonzero(~ok)):
            res.fail(f"Y({p.n},{p.m}) v={e[a].tolist()} u={e[b].tolist()}: d_Y {dy[a, b]}, d_Z {dz[zidx[a, b]]}")
    return res


@_timed
def check_geodesics(max_vertices: int = 256) -> CheckResult:
    """Every geodesic to 0 shifts each index one way only and has a wall."""
    res = CheckResult("geodesics")
    for kind in Kind:
        for p in param_grid(max_vertices, base=kind.base):
            if p.vertex_count(kind) > max_vertices:
                continue
            res.cells += 1
            m = p.m
            left0, right_m = 1 << 0, 1 << (2 * m + 1)
            for idx, masks in geodesic_move_sets(p, kind).items():
                for mask in masks:
                    res.checks += 1
                    both = any(mask >> (2 * i) & 3 == 3 for i in range(m + 1))
                    inner = any(mask >> (2 * i) & 3 == 0 for i in range(m + 1))
                    wall = inner or not mask & left0 or not mask & right_m
                    if both or not wall:
                        v = vertex_from_index(p, idx, kind)
                        why = "shifts an index both ways" if both else "has no wall"
                        res.fail(f"{kind.value} {v}: a geodesic {why} (mask {mask:#x})")
    return res


@_timed
def check_engines(max_vertices: int = 512) -> CheckResult:
    """The vectorized engine agrees with the vertex-by-vertex reference."""
    res = CheckResult("engines")
    for kind in Kind:
        for p in param_grid(max_vertices, base=kind.base):
            if p.vertex_count(kind) > max_vertices:
                continue
            res.cells += 1
            g = indexed_graph(p, kind)
            src = vertex_from_index(p, g.size - 1, kind)
            ref = reference_bfs(src)
            fast = g.distances(g.size - 1)
            res.checks += len(ref)
            res.expect(len(ref) == g.size, f"{kind.value} {p}: graph is disconnected")
            for v, d in ref.items():
                if fast[vertex_index(v)] != d:
                    res.fail(f"{kind.value} {p}: distance {src} -> {v} differs")
    return res


# -- algebra ---------------------------------------------------------------------------


@_timed
def check_coxeter(max_vertices: int = 4096) -> CheckResult:
    """Affine type-C Coxeter relations pointwise, and (s0 s1)-orbits of size 4."""
    res = CheckResult("coxeter")
    for p in param_grid(max_vertices, min_m=2):
        res.cells += 1
        rep = actions.check_coxeter_relations(p)
        res.checks += rep.checked
        for name, v in rep.violations:
            res.fail(f"Y({p.n},{p.m}) {name} moves {v}")
        res.expect(rep.orbit_sizes == {4}, f"Y({p.n},{p.m}): (s0 s1)-orbit sizes {sorted(rep.orbit_sizes)}")
    return res


@_timed
def check_transitivity(max_vertices: int = 4096) -> CheckResult:
    res = CheckResult("transitivity")
    for p in param_grid(max_vertices, min_m=1):
        res.cells += 1
        res.expect(actions.check_transitivity(p), f"Y({p.n},{p.m}): generators are not transitive")
    return res


@_timed
def check_group_relations(max_vertices: int = 4096) -> CheckResult:
    """(tau psi)^2 = phi^m, psi phi = phi^-1 psi, tau phi = phi^-1 tau; each map is an automorphism."""
    res = CheckResult("group-relations")
    for p in param_grid(max_vertices):
        res.cells += 1
        g = indexed_graph(p)
        f = {name: automorphisms.fundamental_permutation(name, p) for name in ("phi", "psi", "tau")}
        phi, psi, tau = f["phi"], f["psi"], f["tau"]
        phi_inv = np.argsort(phi)
        phi_m = np.arange(g.size)
        for _ in range(p.m):
            phi_m = phi[phi_m]
        # composition (a b)(x) = a[b[x]]
        tp = tau[psi]
        relations = {
            "(tau psi)^2 = phi^m": (tp[tp], phi_m),
            "psi phi = phi^-1 psi": (psi[phi], phi_inv[psi]),
            "tau phi = phi^-1 tau": (tau[phi], phi_inv[tau]),
        }
        for name, (lhs, rhs) in relations.items():
            bad = np.flatnonzero(lhs != rhs)
            res.checks += g.size
            for i in bad[:1]:
                res.fail(f"Y({p.n},{p.m}) {name} fails at {vertex_from_index(p, int(i))}")
            res.failure_count += max(0, len(bad) - 1)
        nbrs = np.sort(g.table, axis=1)
        for name, perm in f.items():
            image = np.sort(np.where(g.table >= 0, perm[np.maximum(g.table, 0)], -1), axis=1)
            res.expect(np.array_equal(image, nbrs[perm]), f"Y({p.n},{p.m}): {name} is not an automorphism")
    return res


NAMED_AUT_ORDERS = {(1, 3): 16, (1, 4): 4, (2, 4): 8, (3, 3): 12}


@_timed
def check_automorphisms(max_vertices: int = 256, cycle_max_n: int = 64, m2_max_n: int = 4) -> CheckResult:
    """Brute-force automorphism groups against the structure theorems.

    For m != 2 the count must equal the theorem's order and, away from
    Y(1, 3), every automorphism must be some ``phi^k tau^a psi^b``.  Groups
    for m = 2 grow exponentially in n; they are only counted, up to
    ``m2_max_n``.
    """
    res = CheckResult("automorphisms")
    cells = {p for p in param_grid(max_vertices) if p.m != 2}
    cells |= {GraphParams(n, m) for n, m in NAMED_AUT_ORDERS}
    cells |= {GraphParams(n, 0) for n in range(1, cycle_max_n + 1)}
    for p in sorted(cells, key=lambda q: (q.m, q.n)):
        res.cells += 1
        auts = automorphisms.brute_force_automorphisms(p)
        want = automorphisms.full_aut_structure(p).order
        if (p.n, p.m) in NAMED_AUT_ORDERS:
            want = NAMED_AUT_ORDERS[(p.n, p.m)]
            res.notes.append(f"|aut Y({p.n},{p.m})| = {len(auts)}")
        if p.m == 0 and p.n > 2:
            want = 2 * p.n
        res.expect(len(auts) == want, f"|aut Y({p.n},{p.m})| = {len(auts)}, expected {want}")
        if (p.n, p.m) == (1, 3):
            continue
        actions_ = {el_perm.tobytes() for _, el_perm in automorphisms.iter_distinct_elements(p)}
        for perm in auts:
            res.expect(perm.tobytes() in actions_, f"Y({p.n},{p.m}): automorphism {perm.tolist()} is not canonical")
    counts = []
    for n in range(1, m2_max_n + 1):
        p = GraphParams(n, 2)
        counts.append(f"Y({n},2): {len(automorphisms.brute_force_automorphisms(p))}")
    res.notes.append("m = 2 counts (no theorem): " + ", ".join(counts))
    return res


# -- families -------------------------------------------------------------------------


def _check_family(
    res: CheckResult,
    label: str,
    params: GraphParams,
    objects,
    flip_edges,
    forward: Callable,
    backward: Callable,
) -> None:
    res.cells += 1
    g = indexed_graph(params)
    image = {}
    for obj in objects:
        v = forward(obj)
        image[v] = obj
        res.expect(backward(v) == obj, lambda: f"{label}: inverse fails on {obj}")
    res.expect(len(image) == len(objects), f"{label}: map is not injective")
    res.expect(len(image) == g.size, f"{label}: {len(image)} objects for {g.size} vertices")
    mapped = {frozenset(forward(o) for o in e): e for e in flip_edges}
    yoke_edges = set()
    for a in range(g.size):
        for b in g.table[a]:
            if b > a:
                yoke_edges.add(frozenset((vertex_from_index(params, a), vertex_from_index(params, int(b)))))
    extra = sorted(mapped.keys() - yoke_edges, key=lambda e: sorted(v.entries for v in e))
    missing = yoke_edges - mapped.keys()

    def describe() -> str:
        text = f"{label}: {len(extra)} flips are not Yoke edges, {len(missing)} Yoke edges are not flips"
        if extra:
            a, b = sorted(mapped[extra[0]], key=lambda o: str(forward(o)))
            text += f"; e.g. {a} ~ {b} maps to {forward(a)}, {forward(b)}"
        return text

    res.expect(not extra and not missing, describe)


FAMILY_EXAMPLES = {
    "f(4321)": (lambda: str(arcperm.arcperm_to_yoke((4, 3, 2, 1))), "(3,0,0,1)"),
    "g(T)": (
        lambda: str(ctft.ctft_to_yoke(ctft.ColoredTriangulation(8, ((0, 6), (1, 6), (2, 6), (2, 5), (3, 5))))),
        "(7,1,1,0,1,6)",
    ),
    "h(C)": (
        lambda: str(caterpillar.caterpillar_to_yoke(_example_caterpillar())),
        "(7,1,1,1,0,1,5)",
    ),
    "S(C)": (
        lambda: str(caterpillar.caterpillar_ordering(_example_caterpillar())).replace(" ", ""),
        "(7,6,5,4,1,3)",
    ),
}


def _example_caterpillar() -> caterpillar.Caterpillar:
    return caterpillar.Caterpillar(8, ((7, 0), (0, 1), (1, 2), (0, 5), (0, 4), (1, 3), (0, 6)))


@_timed
def check_families(max_n: int = 8) -> CheckResult:
    """g, f and h are bijections carrying native flips exactly onto Yoke edges."""
    res = CheckResult("families")
    for name, (compute, want) in FAMILY_EXAMPLES.items():
        got = compute()
        res.expect(got == want, f"{name} = {got}, expected {want}")
    for n in range(5, max_n + 1):
        _check_family(
            res, f"g n={n}", GraphParams(n, n - 4), ctft.enumerate_ctft(n), ctft.ctft_flip_edges(n),
            ctft.ctft_to_yoke, ctft.yoke_to_ctft,
        )
    for n in range(2, max_n + 1):
        _check_family(
            res, f"f n={n}", GraphParams(n, n - 2), arcperm.enumerate_arcperms(n), arcperm.arcperm_flip_edges(n),
            arcperm.arcperm_to_yoke, arcperm.yoke_to_arcperm,
        )
    for n in range(4, max_n + 1):
        _check_family(
            res, f"h n={n}", GraphParams(n, n - 3), caterpillar.enumerate_caterpillars(n),
            caterpillar.caterpillar_flip_edges(n), caterpillar.caterpillar_to_yoke, caterpillar.yoke_to_caterpillar,
        )
    side = CheckResult("h-complemented")
    for n in range(4, max_n + 1):
        _check_family(
            side, f"n={n}", GraphParams(n, n - 3), caterpillar.enumerate_caterpillars(n),
            caterpillar.caterpillar_flip_edges(n), caterpillar.caterpillar_to_yoke_complemented,
            caterpillar.yoke_to_caterpillar_complemented,
        )
    res.notes.append(
        "h with complemented bits: "
        + ("exact edge correspondence" if side.ok else "; ".join(side.failures))
        + f" for 4 <= n <= {max_n}"
    )
    return res


# -- dominance ------------------------------------------------------------------------


@_timed
def check_dominance(
    pairs: int = 10_000, max_k: int = 6, spread: int = 2, seed: int = DEFAULT_SEED, interval_vertices: int = 1024
) -> CheckResult:
    """Modular distance identity against box BFS, lattice axioms, interval isomorphism."""
    res = CheckResult("dominance")
    rng = random.Random(seed)
    res.notes.append(f"seed {seed}")

    def vec(k: int) -> tuple[int, ...]:
        return tuple(rng.randint(-spread, spread) for _ in range(k))

    D = dominance
    for _ in range(pairs):
        k = rng.randint(1, max_k)
        s, t, u = vec(k), vec(k), vec(k)
        res.cells += 1
        meet, join = D.meet_dom(s, t), D.join_dom(s, t)
        bfs = D.box_bfs_distance(s, t)
        res.expect(
            bfs == D.hasse_distance_dom(s, t) == D.rank_dom(join) - D.rank_dom(meet),
            lambda: f"s={s} t={t}: box BFS {bfs}, rank(join)-rank(meet) {D.rank_dom(join) - D.rank_dom(meet)}",
        )
        axioms = [
            D.dominates(s, meet) and D.dominates(t, meet),
            D.dominates(join, s) and D.dominates(join, t),
            D.meet_dom(s, t) == D.meet_dom(t, s) and D.join_dom(s, t) == D.join_dom(t, s),
            D.meet_dom(D.meet_dom(s, t), u) == D.meet_dom(s, D.meet_dom(t, u)),
            D.join_dom(D.join_dom(s, t), u) == D.join_dom(s, D.join_dom(t, u)),
            D.meet_dom(s, D.join_dom(s, t)) == s and D.join_dom(s, D.meet_dom(s, t)) == s,
            D.meet_dom(s, s) == s == D.join_dom(s, s),
            # greatest lower bound: u below s and t implies u below the meet
            not (D.dominates(s, u) and D.dominates(t, u)) or D.dominates(meet, u),
            not (D.dominates(u, s) and D.dominates(u, t)) or D.dominates(u, join),
            D.rank_dom(meet) + D.rank_dom(join) == D.rank_dom(s) + D.rank_dom(t),
            D.chi_inv(D.chi(s)) == s,
        ]
        res.expect(all(axioms), lambda: f"lattice axiom {axioms.index(False)} fails for s={s} t={t} u={u}")
    for p in param_grid(interval_vertices, min_m=2):
        if p.m > p.n:
            continue
        res.cells += 1
        res.expect(dominance.interval_isomorphism_check(p), f"Y({p.n},{p.m}): intervals are not isomorphic")
    return res


# -- suites ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    """Overrides for the sweep limits; ``None`` keeps each check's default."""

    max_vertices: int | None = None
    all_pairs_vertices: int | None = None
    max_n: int | None = None
    pairs: int | None = None
    seed: int = DEFAULT_SEED


def _kw(**kwargs) -> dict:
    return {k: v for k, v in kwargs.items() if v is not None}


def _core(b: Bounds) -> list[CheckResult]:
    return [check_engines(**_kw(max_vertices=b.max_vertices))]


def _pivots(b: Bounds) -> list[CheckResult]:
    mv = b.max_vertices
    return [
        check_formula_overlaps(),
        check_ecc_formula(**_kw(max_vertices=mv, max_n=b.max_n)),
        check_diameter(**_kw(max_vertices=mv, max_dyoke_vertices=mv, all_pairs_vertices=b.all_pairs_vertices)),
        check_closed_form_distance(**_kw(max_vertices=mv)),
    ]


SUITES: dict[str, Callable[[Bounds], list[CheckResult]]] = {
    "core": _core,
    "pivots": _pivots,
    "difference": lambda b: [check_difference_map(**_kw(max_vertices=b.max_vertices))],
    "geodesic": lambda b: [check_geodesics(**_kw(max_vertices=b.max_vertices))],
    "coxeter": lambda b: [
        check_coxeter(**_kw(max_vertices=b.max_vertices)),
        check_transitivity(**_kw(max_vertices=b.max_vertices)),
    ],
    "group": lambda b: [check_group_relations(**_kw(max_vertices=b.max_vertices))],
    "aut": lambda b: [check_automorphisms(**_kw(max_vertices=b.max_vertices))],
    "families": lambda b: [check_families(**_kw(max_n=b.max_n))],
    "dominance": lambda b: [check_dominance(**_kw(pairs=b.pairs, seed=b.seed))],
}


def run_suite(name: str, bounds: Bounds = Bounds()) -> list[CheckResult]:
    """Run one suite, or every suite for ``"all"``."""
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](bounds)]
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}") from None
    return suite(bounds)
