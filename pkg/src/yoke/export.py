"""Deterministic graph export as Graphviz DOT or JSON lines.

Vertices appear in index order and edges in order of their endpoints'
indices, so identical parameters always give byte-identical output.

>>> from yoke.core import GraphParams
>>> print(to_dot(GraphParams(1, 1)), end="")
graph "Y(1,1)" {
  0 [label="(0 0 0)"];
  1 [label="(0 1 0)"];
  0 -- 1;
}
>>> print(to_jsonl(GraphParams(1, 1)), end="")
{"a": [0, 0, 0], "b": [0, 1, 0], "i": 0}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterator

import numpy as np

from .core import GraphParams, Kind
from .search import indexed_graph


def edge_list(params: GraphParams, kind: Kind = Kind.YOKE) -> Iterator[tuple[int, int, int]]:
    """``(a, b, i)`` with ``a < b`` vertex indices and ``i`` the shift index.

    When several shifts join the same pair (only in tiny graphs) the smallest
    index is reported.
    """
    g = indexed_graph(params, kind)
    table = g.table
    for a in range(g.size):
        row = table[a]
        pairs = sorted((int(b), c // 2) for c, b in enumerate(row) if b > a)
        yield from ((a, b, i) for b, i in pairs)


def _label(entries: np.ndarray) -> str:
    return "(" + " ".join(str(int(x)) for x in entries) + ")"


def _name(params: GraphParams, kind: Kind) -> str:
    return f"{'Y' if kind is Kind.YOKE else 'Z'}({params.n},{params.m})"


def to_dot(params: GraphParams, kind: Kind = Kind.YOKE) -> str:
    g = indexed_graph(params, kind)
    lines = [f'graph "{_name(params, kind)}" {{']
    lines += [f'  {i} [label="{_label(e)}"];' for i, e in enumerate(g.entries)]
    lines += [f"  {a} -- {b};" for a, b, _ in edge_list(params, kind)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_jsonl(params: GraphParams, kind: Kind = Kind.YOKE) -> str:
    ent = indexed_graph(params, kind).entries.tolist()
    rows = (json.dumps({"a": ent[a], "b": ent[b], "i": i}) for a, b, i in edge_list(params, kind))
    return "".join(r + "\n" for r in rows)


def export_graph(params: GraphParams, kind: Kind, fmt: str, path: str | Path | None = None) -> str:
    """Render in ``fmt`` (``dot`` or ``jsonl``); also write to ``path`` if given."""
    render = {"dot": to_dot, "jsonl": to_jsonl}.get(fmt)
    if render is None:
        raise ValueError(f"unknown export format {fmt!r}")
    text = render(params, kind)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
