"""Vertices, unit shifts and adjacency for Yoke graphs Y(n, m) and dYoke graphs Z(n, m).

A vertex is a tuple ``(v_0, v_1, ..., v_m, v_{m+1})``.  The two outer entries
are *buckets* in Z_n, stored as their smallest non-negative representative;
the ``m`` middle entries are in ``{0, 1}`` (Yoke) or ``{-1, 0, 1}`` (dYoke).
The entries always sum to a multiple of ``n``.

Two vertices are adjacent when one is obtained from the other by moving a
single unit between entries ``i`` and ``i + 1``.  Moving the unit from entry
``i + 1`` to entry ``i`` is a *left* shift at ``i``; the reverse is a *right*
shift at ``i``.

>>> p = GraphParams(3, 3)
>>> v = make_yoke_vertex(p, (2, 0, 1, 1))
>>> v
YokeVertex(n=3, m=3, entries=(2, 0, 1, 1, 2))
>>> [str(nb.vertex) for nb in yoke_neighbors(make_yoke_vertex(p, (0, 0, 0, 0)))]
['(2,1,0,0,0)', '(0,0,0,1,2)']
"""

from __future__ import annotations

import enum
import itertools
import os
import re
from dataclasses import dataclass
from typing import ClassVar, Iterator, NamedTuple, Sequence

from .errors import (
    KindMismatch,
    MiddleEntryOutOfRange,
    ParamMismatch,
    SumNotDivisible,
    TooLarge,
    WrongLength,
)

DEFAULT_MAX_VERTICES = 2**22
DEFAULT_MAX_BRUTE_FORCE = 4096


def max_vertices() -> int:
    """Vertex cap for whole-graph operations (env ``YOKE_MAX_VERTICES``)."""
    return int(os.environ.get("YOKE_MAX_VERTICES", DEFAULT_MAX_VERTICES))


def max_brute_force() -> int:
    """Vertex cap for brute-force automorphism search (env ``YOKE_MAX_BRUTE_FORCE``)."""
    return int(os.environ.get("YOKE_MAX_BRUTE_FORCE", DEFAULT_MAX_BRUTE_FORCE))


class Kind(enum.Enum):
    YOKE = "yoke"
    DYOKE = "dyoke"

    @property
    def middle_values(self) -> tuple[int, ...]:
        return (0, 1) if self is Kind.YOKE else (-1, 0, 1)

    @property
    def base(self) -> int:
        return len(self.middle_values)


class Direction(enum.IntEnum):
    LEFT = 0
    RIGHT = 1

    @property
    def sign(self) -> int:
        # change applied to entry i; entry i+1 gets the opposite
        return 1 if self is Direction.LEFT else -1

    def reverse(self) -> "Direction":
        return Direction.RIGHT if self is Direction.LEFT else Direction.LEFT


@dataclass(frozen=True)
class GraphParams:
    n: int
    m: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or isinstance(self.m, bool):
            raise TypeError("n and m must be integers")
        if int(self.n) != self.n or int(self.m) != self.m:
            raise TypeError("n and m must be integers")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 0:
            raise ValueError(f"m must be >= 0, got {self.m}")

    def vertex_count(self, kind: Kind = Kind.YOKE) -> int:
        return self.n * kind.base**self.m

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


@dataclass(frozen=True, order=True)
class Move:
    """A directed unit shift between entries ``index`` and ``index + 1``."""

    index: int
    direction: Direction

    def reverse(self) -> "Move":
        return Move(self.index, self.direction.reverse())

    def __str__(self) -> str:
        return f"{'L' if self.direction is Direction.LEFT else 'R'}{self.index}"

    @classmethod
    def parse(cls, token: str) -> "Move":
        t = token.strip()
        if len(t) < 2 or t[0].upper() not in "LR" or not t[1:].isdigit():
            raise ValueError(f"not a directed move: {token!r} (expected e.g. 'L0' or 'R3')")
        d = Direction.LEFT if t[0].upper() == "L" else Direction.RIGHT
        return cls(int(t[1:]), d)


@dataclass(frozen=True)
class _Vertex:
    params: GraphParams
    entries: tuple[int, ...]

    kind: ClassVar[Kind]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        n, m = self.params.n, self.params.m
        e = self.entries
        if len(e) != m + 2:
            raise WrongLength(f"expected {m + 2} entries for {self.params}, got {len(e)}")
        for b in (e[0], e[-1]):
            if not 0 <= b < n:
                raise ValueError(f"bucket {b} is not a canonical residue mod {n}")
        allowed = self.kind.middle_values
        for i in range(1, m + 1):
            if e[i] not in allowed:
                raise MiddleEntryOutOfRange(
                    f"entry {i} is {e[i]}, must be one of {allowed}"
                )
        if sum(e) % n:
            raise SumNotDivisible(f"entries {e} do not sum to 0 mod {n}")

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def m(self) -> int:
        return self.params.m

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m}, entries={self.entries})"

    def is_zero(self) -> bool:
        return not any(self.entries)


class YokeVertex(_Vertex):
    kind = Kind.YOKE


class DYokeVertex(_Vertex):
    kind = Kind.DYOKE


_VERTEX_TYPES = {Kind.YOKE: YokeVertex, Kind.DYOKE: DYokeVertex}

Vertex = YokeVertex | DYokeVertex


def _make_vertex(params: GraphParams, entries: Sequence[int], kind: Kind) -> _Vertex:
    n, m = params.n, params.m
    e = [int(x) for x in entries]
    if len(e) == m + 1:
        e.append(-sum(e))
    elif len(e) != m + 2:
        raise WrongLength(f"expected {m + 1} or {m + 2} entries for {params}, got {len(e)}")
    allowed = kind.middle_values
    for i in range(1, m + 1):
        if e[i] not in allowed:
            raise MiddleEntryOutOfRange(f"entry {i} is {e[i]}, must be one of {allowed}")
    if sum(e) % n:
        raise SumNotDivisible(f"entries {tuple(e)} do not sum to 0 mod {n}")
    e[0] %= n
    e[-1] %= n
    return _VERTEX_TYPES[kind](params, tuple(e))


def make_yoke_vertex(params: GraphParams, entries: Sequence[int]) -> YokeVertex:
    """Validate ``entries`` as a vertex of Y(n, m).

    ``entries`` has length m+2, or m+1 in which case the right bucket is
    completed.  Buckets may be given as any integer and are reduced mod n.
    """
    return _make_vertex(params, entries, Kind.YOKE)  # type: ignore[return-value]


def make_dyoke_vertex(params: GraphParams, entries: Sequence[int]) -> DYokeVertex:
    return _make_vertex(params, entries, Kind.DYOKE)  # type: ignore[return-value]


def make_vertex(params: GraphParams, entries: Sequence[int], kind: Kind = Kind.YOKE) -> Vertex:
    return _make_vertex(params, entries, kind)  # type: ignore[return-value]


def zero(params: GraphParams, kind: Kind = Kind.YOKE) -> Vertex:
    return _VERTEX_TYPES[kind](params, (0,) * (params.m + 2))  # type: ignore[return-value]


def parse_vertex(text: str, params: GraphParams, kind: Kind = Kind.YOKE) -> Vertex:
    """Parse ``"2,0,1,1,2"`` (also ``"(2 0 1 1 2)"``); m+1 entries are completed."""
    tokens = [t for t in re.split(r"[\s,()\[\]]+", text.strip()) if t]
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"cannot parse vertex {text!r}") from None
    return make_vertex(params, values, kind)


def check_same_params(a: _Vertex, b: _Vertex) -> None:
    if a.params != b.params:
        raise ParamMismatch(f"vertices belong to different graphs: {a.params} vs {b.params}")


# -- unit shifts ---------------------------------------------------------------


def shift(v: Vertex, index: int, direction: Direction) -> Vertex | None:
    """Apply a unit shift; ``None`` when a middle entry would leave its range."""
    n, m = v.n, v.m
    if not 0 <= index <= m:
        raise IndexError(f"shift index {index} outside [0, {m}]")
    e = list(v.entries)
    d = direction.sign
    e[index] += d
    e[index + 1] -= d
    lo, hi = v.kind.middle_values[0], v.kind.middle_values[-1]
    for j in (index, index + 1):
        if 1 <= j <= m:
            if not lo <= e[j] <= hi:
                return None
        else:
            e[j] %= n
    return type(v)(v.params, tuple(e))


def left_shift(v: Vertex, index: int) -> Vertex | None:
    return shift(v, index, Direction.LEFT)


def right_shift(v: Vertex, index: int) -> Vertex | None:
    return shift(v, index, Direction.RIGHT)


def apply_move(v: Vertex, move: Move) -> Vertex | None:
    return shift(v, move.index, move.direction)


class Neighbor(NamedTuple):
    vertex: Vertex
    moves: tuple[Move, ...]


def neighbors(v: Vertex) -> list[Neighbor]:
    """All distinct neighbours of ``v`` with every move that reaches them.

    Loops are dropped and parallel edges merged.  Order follows the first
    witnessing move, ascending by (index, Left < Right).
    """
    found: dict[Vertex, list[Move]] = {}
    for i in range(v.m + 1):
        for d in Direction:
            u = shift(v, i, d)
            if u is None or u == v:
                continue
            found.setdefault(u, []).append(Move(i, d))
    return [Neighbor(u, tuple(ms)) for u, ms in found.items()]


def yoke_neighbors(v: YokeVertex) -> list[Neighbor]:
    if v.kind is not Kind.YOKE:
        raise KindMismatch("yoke_neighbors expects a YokeVertex")
    return neighbors(v)


def dyoke_neighbors(u: DYokeVertex) -> list[Neighbor]:
    if u.kind is not Kind.DYOKE:
        raise KindMismatch("dyoke_neighbors expects a DYokeVertex")
    return neighbors(u)


def is_adjacent(u: Vertex, v: Vertex) -> bool:
    """Adjacency straight from the definition, without going through :func:`shift`."""
    check_same_params(u, v)
    if u.kind is not v.kind or u == v:
        return False
    n, m = u.n, u.m

    def diff(j: int) -> int:
        x = u.entries[j] - v.entries[j]
        if j in (0, m + 1):
            x %= n
            # residues n-1 and 1 encode -1 and +1; for n <= 2 both readings apply
            return x
        return x

    changed = [j for j in range(m + 2) if u.entries[j] != v.entries[j]]
    if not changed or len(changed) > 2:
        return False
    for i in range(m + 1):
        if any(j not in (i, i + 1) for j in changed):
            continue
        a, b = diff(i), diff(i + 1)
        for s in (1, -1):
            ok_a = a == s if 1 <= i <= m else a == s % n
            ok_b = b == -s if 1 <= i + 1 <= m else b == (-s) % n
            if ok_a and ok_b:
                return True
    return False


# -- enumeration -----------------------------------------------------------------


def check_cap(params: GraphParams, kind: Kind, cap: int | None = None) -> int:
    count = params.vertex_count(kind)
    limit = max_vertices() if cap is None else cap
    if count > limit:
        raise TooLarge(f"{kind.value} graph {params} has {count} vertices, cap is {limit}")
    return count


def enumerate_vertices(
    params: GraphParams, kind: Kind = Kind.YOKE, cap: int | None = None
) -> Iterator[Vertex]:
    """Every vertex once, in lexicographic order of (v_0, v_1, ..., v_m)."""
    check_cap(params, kind, cap)
    n, m = params.n, params.m
    cls = _VERTEX_TYPES[kind]
    for v0 in range(n):
        for mid in itertools.product(kind.middle_values, repeat=m):
            last = (-(v0 + sum(mid))) % n
            yield cls(params, (v0, *mid, last))


def vertex_index(v: Vertex) -> int:
    """Position of ``v`` in :func:`enumerate_vertices` order."""
    base = v.kind.base
    offset = 0 if v.kind is Kind.YOKE else 1
    idx = v.entries[0]
    for x in v.entries[1 : v.m + 1]:
        idx = idx * base + (x + offset)
    return idx


def vertex_from_index(params: GraphParams, idx: int, kind: Kind = Kind.YOKE) -> Vertex:
    base = kind.base
    offset = 0 if kind is Kind.YOKE else 1
    count = params.vertex_count(kind)
    if not 0 <= idx < count:
        raise IndexError(f"vertex index {idx} outside [0, {count})")
    mid = []
    for _ in range(params.m):
        idx, d = divmod(idx, base)
        mid.append(d - offset)
    mid.reverse()
    v0 = idx
    return _VERTEX_TYPES[kind](params, (v0, *mid, (-(v0 + sum(mid))) % params.n))


def vertex_difference(v: YokeVertex, u: YokeVertex) -> DYokeVertex:
    """Componentwise ``v - u`` as a vertex of Z(n, m)."""
    check_same_params(v, u)
    if v.kind is not Kind.YOKE or u.kind is not Kind.YOKE:
        raise KindMismatch("vertex_difference expects two Yoke vertices")
    diff = [a - b for a, b in zip(v.entries, u.entries)]
    return make_dyoke_vertex(v.params, diff)


def embed(v: YokeVertex) -> DYokeVertex:
    """The same entries viewed as a vertex of Z(n, m)."""
    return DYokeVertex(v.params, v.entries)
