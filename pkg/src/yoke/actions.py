"""Generator maps ``s_i`` on Y(n, m), words, and the Coxeter relations they satisfy.

``s_0`` moves a unit across the left bucket boundary (left when ``v_1 = 1``,
right otherwise), ``s_m`` does the same at the right end, and ``s_i`` for
``0 < i < m`` swaps ``v_i`` and ``v_{i+1}``.  Words are read right to left:
the rightmost letter acts first.

>>> from yoke.core import GraphParams, make_yoke_vertex
>>> v = make_yoke_vertex(GraphParams(3, 3), (2, 0, 1, 1, 2))
>>> run_word(v, "R3,L0,L1")
WordResult(vertex=YokeVertex(n=3, m=3, entries=(0, 0, 0, 0, 0)), is_path=True)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import (
    Direction,
    GraphParams,
    Kind,
    Move,
    Vertex,
    YokeVertex,
    apply_move,
    check_cap,
)
from .errors import IndexOutOfRange, KindMismatch, OutOfRegime
from .search import indexed_graph


@dataclass(frozen=True)
class Generator:
    index: int

    def __str__(self) -> str:
        return f"s{self.index}"


Letter = Union[Generator, Move]


def parse_word(text: str) -> tuple[Letter, ...]:
    """Parse ``"R3,L0,s1"``: ``L``/``R`` letters are directed shifts, ``s`` letters generators."""
    letters: list[Letter] = []
    for token in text.replace(" ", ",").split(","):
        token = token.strip()
        if not token:
            continue
        if token[0] in "sS" and token[1:].isdigit():
            letters.append(Generator(int(token[1:])))
        else:
            letters.append(Move.parse(token))
    return tuple(letters)


def format_word(word: Sequence[Letter]) -> str:
    return ",".join(str(x) for x in word)


def apply_generator(i: int, v: YokeVertex) -> YokeVertex:
    if v.kind is not Kind.YOKE:
        raise KindMismatch("generators act on Yoke vertices")
    m = v.m
    if m < 1:
        raise OutOfRegime("generators s_i need m >= 1")
    if not 0 <= i <= m:
        raise IndexOutOfRange(f"generator index {i} outside [0, {m}]")
    e = v.entries
    if i == 0:
        d = Direction.LEFT if e[1] == 1 else Direction.RIGHT
    elif i == m:
        d = Direction.LEFT if e[m] == 0 else Direction.RIGHT
    else:
        if e[i] == e[i + 1]:
            return v
        d = Direction.LEFT if e[i + 1] == 1 else Direction.RIGHT
    out = apply_move(v, Move(i, d))
    assert out is not None
    return out  # type: ignore[return-value]


class WordResult(NamedTuple):
    vertex: Vertex
    is_path: bool


def run_word(v: Vertex, word: str | Sequence[Letter]) -> WordResult:
    """Apply ``word`` to ``v`` right to left.

    ``is_path`` is false when some letter left the current vertex unchanged,
    or a directed letter was not applicable (the vertex is then kept).
    """
    letters = parse_word(word) if isinstance(word, str) else tuple(word)
    cur = v
    is_path = True
    for letter in reversed(letters):
        if letter.index < 0 or letter.index > v.m:
            raise IndexOutOfRange(f"letter {letter} outside [0, {v.m}]")
        if isinstance(letter, Generator):
            nxt = apply_generator(letter.index, cur)  # type: ignore[arg-type]
        else:
            nxt = apply_move(cur, letter)
        if nxt is None or nxt == cur:
            is_path = False
            continue
        cur = nxt
    return WordResult(cur, is_path)


# -- whole-graph permutations ---------------------------------------------------------


def generator_permutations(params: GraphParams) -> np.ndarray:
    """Row ``i`` is the permutation of vertex indices induced by ``s_i``."""
    if params.m < 1:
        raise OutOfRegime("generators s_i need m >= 1")
    g = indexed_graph(params, Kind.YOKE)
    own = np.arange(g.size)
    perms = np.empty((params.m + 1, g.size), dtype=np.int64)
    for i in range(params.m + 1):
        left = g.moves[:, 2 * i].astype(np.int64)
        right = g.moves[:, 2 * i + 1].astype(np.int64)
        perms[i] = np.where(left >= 0, left, np.where(right >= 0, right, own))
    return perms


def _power_fixes_all(p: np.ndarray, k: int) -> np.ndarray:
    """Mask of points fixed by ``p^k``."""
    x = np.arange(len(p))
    y = x
    for _ in range(k):
        y = p[y]
    return y == x


@dataclass
class CoxeterReport:
    params: GraphParams
    checked: int = 0
    violations: list[tuple[str, YokeVertex]] = field(default_factory=list)
    orbit_sizes: set[int] = field(default_factory=set)

    @property
    def ok(self) -> bool:
        return not self.violations and self.orbit_sizes == {4}


def check_coxeter_relations(params: GraphParams, max_report: int = 20) -> CoxeterReport:
    """Check the affine type-C Coxeter relations pointwise on every vertex."""
    n, m = params.n, params.m
    if m < 2:
        raise OutOfRegime("Coxeter relations are checked for m >= 2")
    check_cap(params, Kind.YOKE)
    s = generator_permutations(params)
    g = indexed_graph(params, Kind.YOKE)
    report = CoxeterReport(params)

    def record(name: str, ok: np.ndarray) -> None:
        report.checked += len(ok)
        for idx in np.flatnonzero(~ok)[: max(0, max_report - len(report.violations))]:
            report.violations.append((name, _vertex(g, int(idx))))

    for i in range(m + 1):
        record(f"s{i}^2", _power_fixes_all(s[i], 2))
    for i in range(m + 1):
        for j in range(i + 2, m + 1):
            record(f"(s{i} s{j})^2", _power_fixes_all(s[i][s[j]], 2))
    for i in range(1, m - 1):
        record(f"(s{i} s{i + 1})^3", _power_fixes_all(s[i][s[i + 1]], 3))
    record("(s0 s1)^4", _power_fixes_all(s[0][s[1]], 4))
    record(f"(s{m - 1} s{m})^4", _power_fixes_all(s[m - 1][s[m]], 4))
    report.orbit_sizes = set(np.unique(_cyclic_orbit_sizes(s[0][s[1]])).tolist())
    return report


def _cyclic_orbit_sizes(p: np.ndarray) -> np.ndarray:
    x = np.arange(len(p))
    size = np.zeros(len(p), dtype=np.int64)
    y = p.copy()
    for k in range(1, len(p) + 1):
        newly = (size == 0) & (y == x)
        size[newly] = k
        if size.all():
            break
        y = p[y]
    return size


def _vertex(g, idx: int) -> YokeVertex:
    row = g.entries[idx]
    return YokeVertex(g.params, tuple(int(x) for x in row))


def check_transitivity(params: GraphParams) -> bool:
    """True when the generators move 0 to every vertex."""
    if params.m < 1:
        raise OutOfRegime("generators s_i need m >= 1")
    s = generator_permutations(params)
    size = s.shape[1]
    rows = np.tile(np.arange(size), len(s))
    graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, s.ravel())), shape=(size, size))
    count, _ = connected_components(graph, directed=False)
    return count == 1


def edge_generator_counts(params: GraphParams) -> dict[frozenset[int], int]:
    """For every edge, how many generators carry one endpoint to the other."""
    s = generator_permutations(params)
    g = indexed_graph(params, Kind.YOKE)
    counts: dict[frozenset[int], int] = {}
    for a in range(g.size):
        for b in g.table[a]:
            if b > a:
                counts[frozenset((a, int(b)))] = int(sum(perm[a] == b for perm in s))
    return counts
