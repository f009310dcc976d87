"""Colored triangle-free triangulations and the map ``g`` onto Y(n, n-4).

A triangulation of the convex n-gon (vertices 0..n-1) is triangle-free when
no triangle has three chords.  Its chords then form a path in which
consecutive chords share a triangle; a coloring is one of the two ways of
numbering that path, so chord 0 cuts off an ear ``(a-1, a+1)``.  Each later
chord widens the previous one ``(k, t)`` by one vertex, either to ``(k-1, t)``
(bit 0) or to ``(k, t+1)`` (bit 1).

>>> T = ColoredTriangulation(8, ((0, 6), (1, 6), (2, 6), (2, 5), (3, 5)))
>>> ctft_to_yoke(T)
YokeVertex(n=8, m=4, entries=(7, 1, 1, 0, 1, 6))
>>> ctft_to_yoke(ctft_flip(T, 2))
YokeVertex(n=8, m=4, entries=(7, 1, 0, 1, 1, 6))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from ..core import GraphParams, YokeVertex, make_yoke_vertex
from ..errors import IllegalFlip, InvalidTriangulation, OutOfRegime

Chord = tuple[int, int]


def _norm(c: Sequence[int], n: int) -> Chord:
    a, b = int(c[0]) % n, int(c[1]) % n
    return (a, b) if a < b else (b, a)


def _crosses(c: Chord, d: Chord) -> bool:
    a, b = c
    x, y = d
    if len({a, b, x, y}) < 4:
        return False
    return (a < x < b) != (a < y < b)


def _is_side(c: Chord, n: int) -> bool:
    return (c[1] - c[0]) % n in (1, n - 1)


@dataclass(frozen=True)
class ColoredTriangulation:
    """Chords listed by color; each chord is stored as a sorted vertex pair."""

    n: int
    chords: tuple[Chord, ...]

    def __post_init__(self) -> None:
        if self.n < 5:
            raise OutOfRegime("colored triangle-free triangulations need n >= 5")
        object.__setattr__(self, "chords", tuple(_norm(c, self.n) for c in self.chords))
        _validate(self)

    def triangles(self) -> list[tuple[int, int, int]]:
        return _triangles(self.n, frozenset(self.chords))

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.chords]


def _triangles(n: int, chords: frozenset[Chord]) -> list[tuple[int, int, int]]:
    edges = set(chords) | {_norm((i, i + 1), n) for i in range(n)}
    return [
        t
        for t in itertools.combinations(range(n), 3)
        if {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= edges
    ]


def _validate(T: ColoredTriangulation) -> None:
    n, chords = T.n, T.chords
    if len(chords) != n - 3:
        raise InvalidTriangulation(f"expected {n - 3} chords, got {len(chords)}")
    if len(set(chords)) != len(chords):
        raise InvalidTriangulation("repeated chord")
    for c in chords:
        if c[0] == c[1] or _is_side(c, n):
            raise InvalidTriangulation(f"{c} is not a diagonal")
    for c, d in itertools.combinations(chords, 2):
        if _crosses(c, d):
            raise InvalidTriangulation(f"chords {c} and {d} cross")
    chord_set = set(chords)
    tris = T.triangles()
    for t in tris:
        if {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= chord_set:
            raise InvalidTriangulation(f"triangle {t} has three chords")
    if (chords[0][1] - chords[0][0]) % n not in (2, n - 2):
        raise InvalidTriangulation(f"chord 0 {chords[0]} does not cut off an ear")
    for i in range(1, len(chords)):
        if not any(set(chords[i - 1]) | set(chords[i]) <= set(t) for t in tris):
            raise InvalidTriangulation(f"chords {i - 1} and {i} share no triangle")


def ctft_to_yoke(T: ColoredTriangulation) -> YokeVertex:
    n = T.n
    p, q = T.chords[0]
    a = (p + 1) % n if (q - p) % n == 2 else (q + 1) % n
    k, t = (a - 1) % n, (a + 1) % n
    bits = []
    for c in T.chords[1:]:
        if c == _norm((k - 1, t), n):
            bits.append(0)
            k = (k - 1) % n
        elif c == _norm((k, t + 1), n):
            bits.append(1)
            t = (t + 1) % n
        else:
            raise InvalidTriangulation(f"chord {c} does not extend {(k, t)}")
    return make_yoke_vertex(GraphParams(n, n - 4), [a, *bits])


def yoke_to_ctft(v: YokeVertex) -> ColoredTriangulation:
    n, m = v.n, v.m
    if n < 5 or m != n - 4:
        raise OutOfRegime(f"g is defined on Y(n, n-4) with n >= 5, got {v.params}")
    a = v.entries[0]
    k, t = a - 1, a + 1
    chords = [(k, t)]
    for bit in v.entries[1 : m + 1]:
        if bit:
            t += 1
        else:
            k -= 1
        chords.append((k, t))
    return ColoredTriangulation(n, tuple(chords))


def ctft_flip(T: ColoredTriangulation, i: int) -> ColoredTriangulation:
    """Replace chord ``i`` by the other diagonal of its quadrilateral."""
    if not 0 <= i < len(T.chords):
        raise IllegalFlip(f"no chord with color {i}")
    c = T.chords[i]
    quad = [t for t in T.triangles() if set(c) <= set(t)]
    assert len(quad) == 2, "a chord borders exactly two triangles"
    apex = [next(x for x in t if x not in c) for t in quad]
    chords = list(T.chords)
    chords[i] = _norm(apex, T.n)
    try:
        return ColoredTriangulation(T.n, tuple(chords))
    except InvalidTriangulation as err:
        raise IllegalFlip(f"flipping chord {i} gives an invalid coloring: {err}") from None


# -- native enumeration ---------------------------------------------------------------


def _triangulations(poly: tuple[int, ...]) -> Iterator[frozenset[Chord]]:
    """All triangulations of the convex polygon with the given vertex list."""
    if len(poly) < 3:
        yield frozenset()
        return
    a, b = poly[0], poly[-1]
    # the triangle on side (a, b) has apex poly[j]
    for j in range(1, len(poly) - 1):
        apex = poly[j]
        extra = set()
        if j > 1:
            extra.add((min(a, apex), max(a, apex)))
        if j < len(poly) - 2:
            extra.add((min(apex, b), max(apex, b)))
        for left in _triangulations(poly[: j + 1]):
            for right in _triangulations(poly[j:]):
                yield left | right | frozenset(extra)


@lru_cache(maxsize=8)
def enumerate_ctft(n: int) -> tuple[ColoredTriangulation, ...]:
    """Every colored triangle-free triangulation, built without the Yoke map."""
    if n < 5:
        raise OutOfRegime("colored triangle-free triangulations need n >= 5")
    out = []
    for chords in _triangulations(tuple(range(n))):
        tris = _triangles(n, chords)
        if any({(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= chords for t in tris):
            continue
        # chords sharing a triangle form a path; number it from either end
        adj: dict[Chord, set[Chord]] = {c: set() for c in chords}
        for t in tris:
            inside = [e for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])) if e in chords]
            for c, d in itertools.combinations(inside, 2):
                adj[c].add(d)
                adj[d].add(c)
        ends = sorted(c for c in chords if len(adj[c]) <= 1)
        for start in ends:
            order, prev = [start], None
            while len(order) < len(chords):
                nxt = next(d for d in adj[order[-1]] if d != prev)
                prev = order[-1]
                order.append(nxt)
            out.append(ColoredTriangulation(n, tuple(order)))
    return tuple(sorted(out, key=lambda T: T.chords))


def ctft_flip_edges(n: int) -> set[frozenset[ColoredTriangulation]]:
    """Pairs joined by a legal flip, found natively."""
    edges = set()
    for T in enumerate_ctft(n):
        for i in range(n - 3):
            try:
                U = ctft_flip(T, i)
            except IllegalFlip:
                continue
            edges.add(frozenset((T, U)))
    return edges
