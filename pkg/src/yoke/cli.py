"""Command-line interface: ``yoke <command> ...``.

Exit status is 0 on success, 1 when a verification finds a violation and 2
on invalid arguments.  Vertices are written as comma-separated integers; an
input with m + 1 entries gets its last bucket filled in.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import automorphisms as aut
from . import dominance as dom
from . import export, pivots, verify
from .actions import run_word
from .core import GraphParams, Kind, Vertex, neighbors, parse_vertex, zero
from .errors import YokeError
from .families import arcperm, caterpillar, ctft
from .search import bfs_diameter, bfs_distance, eccentricity_of_zero, indexed_graph

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(args: argparse.Namespace) -> GraphParams:
    return GraphParams(args.n, args.m)


def _kind(args: argparse.Namespace) -> Kind:
    return Kind.DYOKE if getattr(args, "dyoke", False) else Kind.YOKE


def _vertex(text: str, args: argparse.Namespace) -> Vertex:
    return parse_vertex(text, _params(args), _kind(args))


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands -------------------------------------------------------------------------


def cmd_info(args: argparse.Namespace) -> int:
    p = _params(args)
    g = indexed_graph(p)
    edges = int((g.table >= 0).sum()) // 2
    ecc = pivots.ecc_zero_formula(p)
    diam = pivots.diameter_formula(p)
    gen = aut.generated_group_structure(p)
    try:
        full: str | None = str(aut.full_aut_structure(p))
    except YokeError:
        full = None
    payload = {
        "n": p.n,
        "m": p.m,
        "vertices": g.size,
        "edges": edges,
        "ecc_zero": ecc,
        "diameter": diam,
        "generated_group": {"tag": gen.tag, "order": gen.order},
        "full_aut": full,
    }
    lines = [
        f"Y({p.n},{p.m}): {g.size} {'vertex' if g.size == 1 else 'vertices'}, {edges} {'edge' if edges == 1 else 'edges'}",
        f"ecc(0) = {ecc}",
        f"diam = {diam}",
        f"<phi, psi, tau> = {gen}",
        f"aut = {full if full is not None else 'unknown (m = 2)'}",
    ]
    if p.m == 0:
        lines.insert(1, f"the {p.n}-cycle" if p.n > 2 else ("a single edge" if p.n == 2 else "a single vertex"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_neighbors(args: argparse.Namespace) -> int:
    v = _vertex(args.vertex, args)
    nbs = neighbors(v)
    payload = {"vertex": list(v.entries), "neighbors": [
        {"vertex": list(nb.vertex.entries), "moves": [str(mv) for mv in nb.moves]} for nb in nbs
    ]}
    text = "\n".join(f"{nb.vertex}  via {','.join(str(mv) for mv in nb.moves)}" for nb in nbs)
    _emit(args, payload, text or "(no neighbours)")
    return EXIT_OK


def cmd_dist(args: argparse.Namespace) -> int:
    a = _vertex(args.source, args)
    b = _vertex(args.target, args) if args.target else zero(a.params, a.kind)
    if args.method == "formula":
        if not b.is_zero() or a.kind is not Kind.YOKE:
            raise UsageError("the formula gives distances from a Yoke vertex to 0; use --method bfs")
        res = pivots.dist_to_zero_closed_form(a, with_pivot=True)
        payload = {"distance": res.distance, "pivot": res.pivot}
        _emit(args, payload, f"{res.distance} (pivot {res.pivot})")
    else:
        d = bfs_distance(a, b)
        _emit(args, {"distance": d}, str(d))
    return EXIT_OK


def cmd_ecc_zero(args: argparse.Namespace) -> int:
    p, kind = _params(args), _kind(args)
    value = pivots.ecc_zero_formula(p, kind) if args.method == "formula" else eccentricity_of_zero(p, kind)
    _emit(args, {"ecc_zero": value}, str(value))
    return EXIT_OK


def cmd_diam(args: argparse.Namespace) -> int:
    p = _params(args)
    value = pivots.diameter_formula(p) if args.method == "formula" else bfs_diameter(p, mode=args.mode)
    _emit(args, {"diameter": value}, str(value))
    return EXIT_OK


def cmd_pivots(args: argparse.Namespace) -> int:
    v = _vertex(args.vertex, args)
    prof = pivots.pivot_profile(v)
    payload = prof.as_dict()
    payload["path_lengths"] = {str(q): pivots.pivot_path_length(v, q) for q in prof.pivots}
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def cmd_word(args: argparse.Namespace) -> int:
    v = _vertex(args.start, args)
    res = run_word(v, args.word)
    _emit(
        args,
        {"vertex": list(res.vertex.entries), "is_path": res.is_path},
        f"{res.vertex}{'' if res.is_path else '  (not a path)'}",
    )
    return EXIT_OK


def cmd_aut(args: argparse.Namespace) -> int:
    p = _params(args)
    if args.action == "apply":
        if not args.map or not args.vertex:
            raise UsageError("aut apply needs --map and --vertex")
        el = aut.parse_element(args.map, p)
        w = el(_vertex(args.vertex, args))
        _emit(args, {"element": str(el), "vertex": list(w.entries)}, str(w))
        return EXIT_OK
    if args.brute_force:
        perms = aut.brute_force_automorphisms(p)
        names = []
        for perm in perms:
            el = aut.match_canonical(perm, p) if p.m else None
            names.append(str(el) if el is not None else None)
        payload = {"count": len(perms), "elements": names, "permutations": [q.tolist() for q in perms]}
        shown = ", ".join(x if x is not None else "(non-canonical)" for x in names)
        _emit(args, payload, f"{len(perms)} automorphisms: {shown}")
        return EXIT_OK
    gen = aut.generated_group_structure(p)
    try:
        full = aut.full_aut_structure(p)
        full_text: str | None = str(full)
    except YokeError as err:
        full_text = None
        note = str(err)
    payload = {"generated": {"tag": gen.tag, "order": gen.order}, "full": full_text}
    text = f"<phi, psi, tau>: {gen}\naut: {full_text if full_text else note}"
    _emit(args, payload, text)
    return EXIT_OK


def _vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"cannot parse vector {text!r}") from None


def cmd_dom(args: argparse.Namespace) -> int:
    vecs = [_vec(x) for x in args.vec]
    need = 1 if args.op in ("chi", "rank") else 2
    if len(vecs) != need:
        raise UsageError(f"dom {args.op} takes {need} --vec argument(s)")
    ops = {
        "chi": lambda: dom.chi(vecs[0]),
        "rank": lambda: dom.rank_dom(vecs[0]),
        "meet": lambda: dom.meet_dom(*vecs),
        "join": lambda: dom.join_dom(*vecs),
        "dist": lambda: dom.hasse_distance_dom(*vecs),
    }
    value = ops[args.op]()
    shown = ",".join(map(str, value)) if isinstance(value, tuple) else str(value)
    _emit(args, {args.op: list(value) if isinstance(value, tuple) else value}, shown)
    return EXIT_OK


def _json_pairs(text: str) -> list[tuple[int, int]]:
    try:
        data = json.loads(text)
        return [(int(a), int(b)) for a, b in data]
    except (ValueError, TypeError):
        raise UsageError(f"expected a JSON list of pairs, got {text!r}") from None


_FAMILY_CODIM = {"ctft": 4, "arcperm": 2, "caterpillar": 3}


def cmd_family(args: argparse.Namespace) -> int:
    fam, comp = args.family, args.complemented
    if comp and fam != "caterpillar":
        raise UsageError("--complemented applies to caterpillars only")
    if args.direction == "to-yoke":
        if args.object is None:
            raise UsageError("family ... to-yoke needs an object")
        if fam == "arcperm":
            text = args.object.strip()
            pi = tuple(json.loads(text)) if text.startswith("[") else arcperm.parse_perm(text)
            v = arcperm.arcperm_to_yoke(pi)
        elif fam == "ctft":
            chords = _json_pairs(args.object)
            v = ctft.ctft_to_yoke(ctft.ColoredTriangulation(args.n or len(chords) + 3, tuple(chords)))
        else:
            edges = _json_pairs(args.object)
            C = caterpillar.Caterpillar(args.n or len(edges) + 1, tuple(edges))
            v = (caterpillar.caterpillar_to_yoke_complemented if comp else caterpillar.caterpillar_to_yoke)(C)
        _emit(args, {"vertex": list(v.entries)}, str(v))
        return EXIT_OK
    if args.n is None or args.vertex is None:
        raise UsageError("family ... from-yoke needs --n and --vertex")
    if args.m is None:
        args.m = args.n - _FAMILY_CODIM[fam]
    v = _vertex(args.vertex, args)
    if fam == "arcperm":
        pi = arcperm.yoke_to_arcperm(v)
        _emit(args, {"permutation": list(pi)}, arcperm.format_perm(pi))
    elif fam == "ctft":
        T = ctft.yoke_to_ctft(v)
        _emit(args, {"chords": T.to_json()}, json.dumps(T.to_json()))
    else:
        C = (caterpillar.yoke_to_caterpillar_complemented if comp else caterpillar.yoke_to_caterpillar)(v)
        _emit(args, {"edges": C.to_json()}, json.dumps(C.to_json()))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    text = export.export_graph(_params(args), _kind(args), args.format, args.output)
    if args.output is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = verify.Bounds(
        max_vertices=args.max_vertices,
        all_pairs_vertices=args.all_pairs_vertices,
        max_n=args.max_n,
        pairs=args.pairs,
        seed=args.seed,
    )
    for value in (args.max_vertices, args.max_n, args.pairs, args.all_pairs_vertices):
        if value is not None and value < 1:
            raise UsageError("bounds must be positive")
    results = verify.run_suite(args.suite, bounds)
    ok = all(r.ok for r in results)
    if args.format == "json":
        print(json.dumps({
            "ok": ok,
            "checks": [
                {"name": r.name, "ok": r.ok, "cells": r.cells, "checks": r.checks,
                 "failures": r.failure_count, "counterexamples": r.failures, "notes": r.notes}
                for r in results
            ],
        }, sort_keys=True))
    else:
        for r in results:
            print("\n".join(r.lines()), flush=True)
    return EXIT_OK if ok else EXIT_FAILED


# -- parser ---------------------------------------------------------------------------


def _graph_args(p: argparse.ArgumentParser, kind: bool = True, required: bool = True) -> None:
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--m", type=int, required=required)
    if kind:
        p.add_argument("--dyoke", action="store_true", help="work in Z(n, m) instead of Y(n, m)")


def _fmt(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yoke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="counts, formulas and symmetry type")
    _graph_args(p, kind=False)
    _fmt(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("neighbors", help="neighbours of a vertex")
    _graph_args(p)
    p.add_argument("--vertex", required=True)
    _fmt(p)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("dist", help="distance between two vertices (default target 0)")
    _graph_args(p)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target")
    p.add_argument("--method", choices=("formula", "bfs"), default="formula")
    _fmt(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("ecc-zero", help="eccentricity of 0")
    _graph_args(p)
    p.add_argument("--method", choices=("formula", "bfs"), default="formula")
    _fmt(p)
    p.set_defaults(func=cmd_ecc_zero)

    p = sub.add_parser("diam", help="diameter of Y(n, m)")
    _graph_args(p, kind=False)
    p.add_argument("--method", choices=("formula", "bfs"), default="formula")
    p.add_argument("--mode", choices=("orbit", "naive"), default="orbit", help="sources used by --method bfs")
    _fmt(p)
    p.set_defaults(func=cmd_diam)

    p = sub.add_parser("pivots", help="pivot profile of a vertex, as JSON")
    _graph_args(p)
    p.add_argument("--vertex", required=True)
    p.set_defaults(func=cmd_pivots)

    p = sub.add_parser("word", help="apply a word in the shifts and generators")
    p.add_argument("action", choices=("run",))
    _graph_args(p, kind=False)
    p.add_argument("--start", required=True)
    p.add_argument("--word", required=True, help='letters such as "L0,R3,s1"; the rightmost acts first')
    _fmt(p)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("aut", help="automorphism group")
    p.add_argument("action", nargs="?", choices=("apply",))
    _graph_args(p, kind=False)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--structure", action="store_true", help="structure from the theorems (default)")
    mode.add_argument("--brute-force", action="store_true", help="enumerate by backtracking search")
    p.add_argument("--map", help='group element such as "phi^2.tau"')
    p.add_argument("--vertex")
    _fmt(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("dom", help="dominance order on integer vectors")
    p.add_argument("op", choices=("chi", "rank", "meet", "join", "dist"))
    p.add_argument("--vec", action="append", default=[], help="comma-separated integers")
    _fmt(p)
    p.set_defaults(func=cmd_dom)

    p = sub.add_parser("family", help="flip-graph families and their Yoke images")
    p.add_argument("family", choices=("ctft", "arcperm", "caterpillar"))
    p.add_argument("direction", choices=("to-yoke", "from-yoke"))
    p.add_argument("object", nargs="?", help="JSON chord or edge list, or a one-line permutation")
    _graph_args(p, kind=False, required=False)
    p.add_argument("--vertex")
    p.add_argument("--complemented", action="store_true", help="caterpillars: 1 marks a right step")
    _fmt(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("export", help="write the graph as DOT or JSON lines")
    _graph_args(p)
    p.add_argument("--format", choices=("dot", "jsonl"), default="dot")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="check formulas against graph search")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--all-pairs-vertices", type=int, help="largest graph whose diameter uses every source")
    p.add_argument("--max-n", type=int)
    p.add_argument("--pairs", type=int, help="fuzzed pairs for the dominance suite")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    _fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


_VALUE_OPTIONS = {"--vec", "--vertex", "--from", "--to", "--start"}


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse would read "-1,2" as an option; "--vec=-1,2" is unambiguous
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            value = next(it, None)
            if value is not None and value.startswith("-"):
                out.append(f"{tok}={value}")
                continue
            out.append(tok)
            if value is not None:
                out.append(value)
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, YokeError, ValueError) as err:
        print(f"yoke: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"yoke: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
