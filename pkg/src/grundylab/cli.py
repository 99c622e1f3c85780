"""Command-line front end: ``grundylab SUBCOMMAND ...``.

Exit codes: 0 success, 1 a proven claim or relation failed, 2 bad input,
3 a solver cap or time budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .claims import CATALOG, DEFAULT_MAX_N, verify_many
from .coloring import (
    GRUNDY_MAX_N,
    SolverError,
    chromatic_number,
    clique_number,
    greedy_color,
    grundy_number,
    optimal_coloring,
    partition_of,
)
from .constructions import FAMILIES, construct
from .graph import Graph, GraphError, format_graph, parse_graph_text
from .products import KIND_ALIASES, product
from .report import ClaimReport, reports_to_json, reports_to_tsv
from .sweep import RELATIONS, RandomModel, conjecture_findings, sweep


def _read(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    return parse_graph_text(text, fmt)


def _timeout(args) -> float | None:
    return None if args.timeout_ms is None else args.timeout_ms / 1000.0


def _classes(colors: Sequence[int]) -> list[list[int]]:
    k = max(colors, default=0)
    return [[v for v, c in enumerate(colors) if c == j] for j in range(1, k + 1)]


def _emit_value(args, name: str, g: Graph, value: int, colors: Sequence[int] | None) -> None:
    if args.json:
        out = {"n": g.n, "m": g.num_edges, name: value}
        if colors is not None:
            out["colors"] = list(colors)
            out["classes"] = _classes(colors)
        print(json.dumps(out))
        return
    print(f"{name}\t{value}")
    if colors is not None:
        print("classes\t" + " ".join("{" + ",".join(map(str, c)) + "}" for c in _classes(colors)))


def cmd_grundy(args) -> int:
    g = _read(args.file, args.input_format)
    k, part = grundy_number(g, max_n=args.max_n or GRUNDY_MAX_N, timeout=_timeout(args))
    _emit_value(args, "grundy", g, k, part.coloring(g.n))
    return 0


def cmd_chi(args) -> int:
    g = _read(args.file, args.input_format)
    k = chromatic_number(g, max_n=args.max_n or DEFAULT_MAX_N)
    _emit_value(args, "chi", g, k, optimal_coloring(g))
    return 0


def cmd_omega(args) -> int:
    g = _read(args.file, args.input_format)
    _emit_value(args, "omega", g, clique_number(g, max_n=args.max_n or DEFAULT_MAX_N), None)
    return 0


def cmd_greedy(args) -> int:
    g = _read(args.file, args.input_format)
    try:
        order = [int(t) for t in args.order.split(",") if t.strip()]
    except ValueError:
        raise GraphError(f"--order must be comma-separated vertex ids, got {args.order!r}") from None
    colors, k = greedy_color(g, order)
    partition_of(g, colors)
    _emit_value(args, "colors_used", g, k, colors)
    return 0


def cmd_product(args) -> int:
    g = _read(args.first, args.input_format)
    h = _read(args.second, args.input_format)
    lay = product(g, h, args.kind)
    if args.json:
        print(json.dumps({"kind": lay.kind, "n_g": lay.n_g, "n_h": lay.n_h, "n": lay.product.n,
                          "m": lay.product.num_edges, "graph6": format_graph(lay.product, "graph6").strip()}))
    else:
        sys.stdout.write(format_graph(lay.product, args.output_format))
    return 0


def cmd_construct(args) -> int:
    g = construct(args.family, *args.params)
    if args.json:
        print(json.dumps({"family": args.family, "params": args.params, "n": g.n, "m": g.num_edges,
                          "graph6": format_graph(g, "graph6").strip()}))
    else:
        sys.stdout.write(format_graph(g, args.output_format))
    return 0


def _emit_reports(args, reports: list[ClaimReport]) -> int:
    if args.json:
        sys.stdout.write(reports_to_json(reports, timing=args.timing))
    else:
        sys.stdout.write(reports_to_tsv(reports, timing=args.timing))
    return 1 if any(r.blocking for r in reports) else 0


def cmd_verify(args) -> int:
    if args.list:
        for cid in sorted(CATALOG):
            c = CATALOG[cid]
            print(f"{cid}\t{'conjecture' if c.conjecture else 'claim'}\t{c.title}")
        return 0
    ids = None if args.claim in (None, "all") else [args.claim]
    if ids and ids[0] not in CATALOG:
        raise GraphError(f"unknown claim {ids[0]!r}; run 'verify --list' for the catalog")
    reports = verify_many(ids, jobs=args.jobs, timeout=_timeout(args), max_n=args.max_n or DEFAULT_MAX_N)
    return _emit_reports(args, reports)


def cmd_sweep(args) -> int:
    if args.conjectures:
        return _emit_reports(args, conjecture_findings(jobs=args.jobs, timeout=_timeout(args)))
    rels = None if args.relations == "all" else [r.strip() for r in args.relations.split(",")]
    try:
        rep = sweep(RandomModel(args.n, args.p, args.seed), args.count, rels, jobs=args.jobs, timeout=_timeout(args))
    except KeyError as exc:
        raise GraphError(exc.args[0]) from None
    return _emit_reports(args, [rep])


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("graph6", "edgelist"),
                        help="graph format for input and output (input defaults to auto-detect, output to graph6)")
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify/sweep")
    common.add_argument("--max-n", type=int, default=None, help="vertex cap for exact solvers")
    common.add_argument("--timeout-ms", type=int, default=None, help="time budget per solver call")
    common.add_argument("--timing", action="store_true", help="include elapsed times in reports")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="grundylab", description="Grundy numbers of graphs and graph products.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (("grundy", cmd_grundy, "exact Grundy number with a greedy witness"),
                            ("chi", cmd_chi, "chromatic number with an optimal colouring"),
                            ("omega", cmd_omega, "clique number")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", help="graph file, or - for standard input")
        p.set_defaults(func=fn)

    p = sub.add_parser("greedy", parents=[common], help="first-fit colouring along an ordering")
    p.add_argument("file")
    p.add_argument("--order", required=True, help="comma-separated vertex permutation, e.g. 0,3,1,2")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("product", parents=[common], help="build a graph product")
    p.add_argument("--kind", required=True, choices=sorted(KIND_ALIASES))
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("construct", parents=[common], help="build a named graph family")
    p.add_argument("family", choices=list(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="replay catalogued claims")
    p.add_argument("claim", nargs="?", default="all", help="claim id or 'all'")
    p.add_argument("--list", action="store_true", help="list catalog ids and exit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="check relations on seeded random graphs")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--relations", default="all", help=f"comma-separated subset of: {', '.join(RELATIONS)}")
    p.add_argument("--conjectures", action="store_true", help="run the fixed conjecture grid instead")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.input_format = args.fmt or "auto"
    args.output_format = args.fmt or "graph6"
    try:
        return args.func(args)
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
