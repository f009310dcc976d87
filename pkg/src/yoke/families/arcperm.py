"""Arc permutations and the map ``f`` onto Y(n, n-2).

A permutation of 1..n is an arc permutation when each prefix is an interval
of Z_n (with n read as 0).  Each new letter extends the current interval
``[l, r]`` either upward to ``r + 1`` (bit 1) or downward to ``l - 1`` (bit 0).

>>> arcperm_to_yoke((4, 3, 2, 1))
YokeVertex(n=4, m=2, entries=(3, 0, 0, 1))
>>> yoke_to_arcperm(arcperm_to_yoke((2, 3, 4, 1)))
(2, 3, 4, 1)
"""

from __future__ import annotations

import itertools
from typing import Sequence

from ..core import GraphParams, YokeVertex, make_yoke_vertex
from ..errors import NotAPermutation, NotArcPermutation, OutOfRegime

Perm = tuple[int, ...]


def parse_perm(text: str) -> Perm:
    """``"3421576"`` for n <= 9, otherwise comma separated."""
    t = text.strip()
    if "," in t or " " in t:
        return tuple(int(x) for x in t.replace(",", " ").split())
    return tuple(int(ch) for ch in t)


def format_perm(pi: Sequence[int]) -> str:
    if len(pi) <= 9:
        return "".join(map(str, pi))
    return ",".join(map(str, pi))


def _check_perm(pi: Sequence[int]) -> None:
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise NotAPermutation(f"{tuple(pi)} is not a permutation of 1..{len(pi)}")


def _is_interval(values: set[int], n: int) -> bool:
    # an interval of Z_n has exactly one element whose predecessor is missing
    if len(values) in (0, n):
        return True
    return sum((x - 1) % n not in values for x in values) == 1


def is_arc_permutation(pi: Sequence[int]) -> bool:
    _check_perm(pi)
    n = len(pi)
    seen: set[int] = set()
    for x in pi:
        seen.add(x % n)
        if not _is_interval(seen, n):
            return False
    return True


def arcperm_to_yoke(pi: Sequence[int]) -> YokeVertex:
    pi = tuple(int(x) for x in pi)
    if not is_arc_permutation(pi):
        raise NotArcPermutation(f"{format_perm(pi)} is not an arc permutation")
    n = len(pi)
    if n < 2:
        raise OutOfRegime("f is defined for n >= 2")
    prefix = {pi[0] % n}
    bits = []
    for x in pi[1 : n - 1]:
        bits.append(1 if (x - 1) % n in prefix else 0)
        prefix.add(x % n)
    return make_yoke_vertex(GraphParams(n, n - 2), [pi[0] - 1, *bits])


def yoke_to_arcperm(v: YokeVertex) -> Perm:
    n, m = v.n, v.m
    if n < 2 or m != n - 2:
        raise OutOfRegime(f"f is defined on Y(n, n-2) with n >= 2, got {v.params}")
    # work with residues 0..n-1 for the letters 1..n (n is residue 0)
    first = (v.entries[0] + 1) % n
    lo = hi = first
    out = [first]
    for bit in v.entries[1 : m + 1]:
        if bit:
            hi = (hi + 1) % n
            out.append(hi)
        else:
            lo = (lo - 1) % n
            out.append(lo)
    out.append((hi + 1) % n)
    return tuple(x if x else n for x in out)


def enumerate_arcperms(n: int) -> list[Perm]:
    """All arc permutations of 1..n, by filtering the symmetric group."""
    return [p for p in itertools.permutations(range(1, n + 1)) if is_arc_permutation(p)]


def arcperm_flip_edges(n: int) -> set[frozenset[Perm]]:
    """Pairs ``pi``, ``pi (i, i+1)`` that are both arc permutations."""
    arcs = set(enumerate_arcperms(n))
    edges = set()
    for p in arcs:
        for i in range(n - 1):
            q = list(p)
            q[i], q[i + 1] = q[i + 1], q[i]
            if tuple(q) in arcs:
                edges.add(frozenset((p, tuple(q))))
    return edges
