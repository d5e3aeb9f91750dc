"""Command-line front end.

Verbs: params, forcing, grundy, bl, rank, bounds, verify, sweep.
Graph arguments accept a graph6 literal, @file.g6, or @file.edges.
Exit codes: 0 success, 1 invariant/validation failure, 2 input error,
3 solver cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import forcing, grundy, matrices, reports
from .forcing import Rule
from .graphs import (CapExceeded, Graph, ParseError, build_BL, family,
                     graph_to_json_dict, parse_edge_list, parse_graph6,
                     parse_graph6_lines)
from .grundy import SeqKind

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def load_graph(arg: str) -> Graph:
    """A graph6 literal, @file.g6 (first line), or @file.edges."""
    if arg.startswith("@") and len(arg) > 1:
        path = Path(arg[1:])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
        if path.suffix == ".edges":
            return parse_edge_list(text)
        graphs = parse_graph6_lines(text)
        if not graphs:
            raise ParseError(f"{path} contains no graphs")
        return graphs[0]
    return parse_graph6(arg)


def load_graphs(arg: str) -> list[Graph]:
    if arg.startswith("@") and len(arg) > 1:
        path = Path(arg[1:])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
        if path.suffix == ".edges":
            return [parse_edge_list(text)]
        return parse_graph6_lines(text)
    return [parse_graph6(arg)]


def _parse_range(spec: str) -> range:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(spec)
    return range(v, v + 1)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "tsv":
        flat = _flatten(payload)
        print("\t".join(flat))
        print("\t".join(str(payload_at(payload, key)) for key in flat))
    else:
        print(json.dumps(payload, indent=2))


def _flatten(d: dict, prefix: str = "") -> list[str]:
    keys = []
    for k, v in d.items():
        name = f"{prefix}{k}"
        if isinstance(v, dict):
            keys += _flatten(v, name + ".")
        elif isinstance(v, (int, float, str, bool)) or v is None:
            keys.append(name)
    return keys


def payload_at(d: dict, dotted: str):
    cur = d
    for part in dotted.split("."):
        cur = cur[part]
    return cur


_GLOBAL_DEFAULTS = {"seed": 0, "trials": 32, "max_n": 20, "max_n_cc": 16,
                    "fmt": "json", "deterministic": False}


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps an unset flag from clobbering the other parse level,
    # so global flags work both before and after the verb
    c = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    c.add_argument("--seed", type=int)
    c.add_argument("--trials", type=int)
    c.add_argument("--max-n", type=int, help="exact-solver size cap")
    c.add_argument("--max-n-cc", type=int, help="clique-cover size cap")
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--tsv", dest="fmt", action="store_const", const="tsv")
    c.add_argument("--deterministic", action="store_true",
                   help="canonical (lexicographically smallest) optimal certificates")
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    ap = argparse.ArgumentParser(prog="zfgd", parents=[common],
                                 description="Exact zero forcing / Grundy domination solvers")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("params", parents=[common],
                       help="full parameter report for one graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=("auto", "direct", "dual", "cross_check"),
                   default="auto")

    p = sub.add_parser("forcing", parents=[common], help="one forcing number")
    p.add_argument("graph")
    p.add_argument("--rule", required=True, choices=[r.value for r in Rule])
    p.add_argument("--method", choices=("direct", "dual", "cross_check"), default="dual")

    p = sub.add_parser("grundy", parents=[common], help="one sequence maximum")
    p.add_argument("graph")
    p.add_argument("--kind", required=True, choices=[k.value for k in SeqKind])
    p.add_argument("--restrict", default=None,
                   help="comma-separated vertices (TotalDominating only)")

    p = sub.add_parser("bl", parents=[common], help="emit the tripled bipartite product")
    p.add_argument("graph")

    p = sub.add_parser("rank", parents=[common],
                       help="exact rank of an integer matrix file")
    p.add_argument("matrix", help="text matrix: 'rows cols' header then rows")

    p = sub.add_parser("bounds", parents=[common],
                       help="alpha/beta/gamma/cc with certificates")
    p.add_argument("graph")
    p.add_argument("--skip-cc", action="store_true", default=False)

    p = sub.add_parser("verify", parents=[common],
                       help="run the invariant battery on one graph")
    p.add_argument("graph")

    p = sub.add_parser("sweep", parents=[common],
                       help="parameter reports for a family or .g6 file")
    p.add_argument("--family", required=True,
                   help="path|cycle|complete|empty or @file.g6")
    p.add_argument("--range", dest="range_spec", default=None, help="e.g. 1..10")
    p.add_argument("--out", required=True)
    p.add_argument("--method", choices=("auto", "direct", "dual", "cross_check"),
                   default="auto")
    return ap


def _run(args) -> int:
    if args.verb == "params":
        g = load_graph(args.graph)
        rep = reports.compute_all(g, method=args.method, max_n=args.max_n,
                                  max_n_cc=args.max_n_cc,
                                  deterministic=args.deterministic)
        _emit(reports.report_to_json_dict(rep), args.fmt)
        problems = reports.validate_report(rep, g)
        if problems:
            print("\n".join(problems), file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK

    if args.verb == "forcing":
        g = load_graph(args.graph)
        k, witness = forcing.zero_forcing_number(
            g, Rule(args.rule), args.method, max_n=args.max_n,
            deterministic=args.deterministic)
        _emit({"rule": args.rule, "method": args.method, "k": k,
               "witness": sorted(witness)}, args.fmt)
        return EXIT_OK

    if args.verb == "grundy":
        g = load_graph(args.graph)
        kind = SeqKind(args.kind)
        if args.restrict is not None:
            if kind is not SeqKind.TOTAL:
                raise ParseError("--restrict applies to TotalDominating only")
            xs = [int(t) for t in args.restrict.split(",") if t]
            k, seq = grundy.grundy_total_restricted(
                g, xs, max_n=args.max_n, deterministic=args.deterministic)
        else:
            k, seq = grundy.grundy_number(g, kind, max_n=args.max_n,
                                          deterministic=args.deterministic)
        _emit({"kind": kind.value, "k": k, "vertices": list(seq.vertices),
               "witnesses": list(seq.witnesses)}, args.fmt)
        return EXIT_OK

    if args.verb == "bl":
        g = load_graph(args.graph)
        _emit(graph_to_json_dict(build_BL(g)), args.fmt)
        return EXIT_OK

    if args.verb == "rank":
        try:
            text = Path(args.matrix).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {args.matrix}: {exc}") from None
        m = matrices.parse_matrix(text)
        _emit({"rows": m.rows, "cols": m.cols, "rank": matrices.rank_exact(m)}, args.fmt)
        return EXIT_OK

    if args.verb == "bounds":
        g = load_graph(args.graph)
        br = bounds_mod.combinatorial_bounds(
            g, max_n=args.max_n, max_n_cc=args.max_n_cc, include_cc=not args.skip_cc)
        _emit({"alpha": br.alpha, "beta": br.beta, "gamma": br.gamma, "cc": br.cc,
               "independent_set": sorted(br.independent_set),
               "vertex_cover": sorted(br.vertex_cover),
               "dominating_set": sorted(br.dominating_set),
               "clique_cover": None if br.clique_cover is None
               else [sorted(c) for c in br.clique_cover]}, args.fmt)
        return EXIT_OK

    if args.verb == "verify":
        g = load_graph(args.graph)
        outcomes = reports.verify_invariants(g, args.seed, trials=args.trials,
                                             max_n=args.max_n, max_n_cc=args.max_n_cc)
        payload = {"outcomes": [{"invariant": o.invariant, "statement": o.statement,
                                 "graph6": o.graph6, "status": o.status,
                                 "detail": o.detail} for o in outcomes],
                   "failures": sum(o.status == "fail" for o in outcomes)}
        _emit(payload, args.fmt) if args.fmt == "json" else print(
            "\n".join(f"{o.status}\t{o.invariant}" for o in outcomes))
        return EXIT_FAIL if payload["failures"] else EXIT_OK

    if args.verb == "sweep":
        if args.family.startswith("@"):
            graphs = load_graphs(args.family)
        else:
            if args.range_spec is None:
                raise ParseError("--range is required for generator families")
            graphs = [family(args.family, k) for k in _parse_range(args.range_spec)]
        summary = reports.sweep(graphs, args.out, method=args.method,
                                max_n=args.max_n, max_n_cc=args.max_n_cc,
                                deterministic=args.deterministic)
        _emit(summary, args.fmt)
        return EXIT_FAIL if summary["failures"] else EXIT_OK

    raise AssertionError(args.verb)  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for key, value in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return _run(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
