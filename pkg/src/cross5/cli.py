"""Command-line interface.

Exit codes are uniform across subcommands: 0 success, 1 usage or input
error, 2 negative certificate (obstruction, invalid object, unsat), and
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from . import report as report_mod
from .coloring import Coloring, five_color, verify_coloring
from .drawings import (drawing_from_json, drawing_to_json_dict,
                       validate_drawing)
from .graphs import (GraphFormatError, construct_named, from_edge_list_text,
                     from_graph6)
from .immersions import (explain_immersion, immersion_from_json_dict,
                         immersion_to_json_dict)
from .solver import (crossing_number, decide_crossing_number,
                     enumerate_good_drawings)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2
EXIT_BUDGET = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args):
    if getattr(args, "named", None):
        return construct_named(args.named)
    if not getattr(args, "input", None):
        raise GraphFormatError("no graph given: pass --named NAME or a file")
    text = _read_text(args.input)
    fmt = getattr(args, "format", "auto")
    if fmt == "edge-list":
        return from_edge_list_text(text)
    if fmt == "graph6":
        return from_graph6(text)
    stripped = text.strip()
    first = stripped.splitlines()[0].strip() if stripped else ""
    if first.isdigit() or stripped.startswith("#"):
        return from_edge_list_text(text)
    return from_graph6(text)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file (edge-list or graph6), '-' for stdin")
    p.add_argument("--named", help="construct a named graph, e.g. K6, C5, K3,5, join(C3,C5)")
    p.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto")


def cmd_color(args) -> int:
    g = _load_graph(args)
    outcome = five_color(g)
    if outcome.colored:
        if args.json:
            print(json.dumps({"palette": outcome.coloring.palette,
                              "colors": list(outcome.coloring.assignment)}))
        else:
            used = len(set(outcome.coloring.assignment))
            print(f"5-colored with {used} colors: "
                  f"{list(outcome.coloring.assignment)}")
        return EXIT_OK
    ob = outcome.obstruction
    if args.json:
        print(json.dumps({"obstruction": {
            "vertex": ob.vertex,
            "certificate": immersion_to_json_dict(ob.certificate)}}))
    else:
        print(f"not 5-colorable by Kempe extension: K6 immerses at vertex "
              f"{ob.vertex} (certificate verifies)")
    return EXIT_NEGATIVE


def cmd_nu(args) -> int:
    g = _load_graph(args)
    budget = args.budget
    if args.enumerate_good is not None:
        drawings = enumerate_good_drawings(g, args.enumerate_good, budget=budget)
        if args.json:
            print(json.dumps([drawing_to_json_dict(d) for d in drawings]))
        else:
            print(f"{len(drawings)} good drawings with exactly "
                  f"{args.enumerate_good} crossings")
        return EXIT_OK
    if args.le is not None:
        out = decide_crossing_number(g, args.le, mode=args.mode, budget=budget)
        if args.json:
            payload = {"k": args.le, "status": out.status,
                       "nodes": out.nodes, "planarity_calls": out.planarity_calls}
            if out.witness is not None:
                payload["witness"] = drawing_to_json_dict(out.witness)
            print(json.dumps(payload))
        else:
            print(f"decide(<= {args.le}): {out.status} "
                  f"({out.planarity_calls} planarity calls)")
        if out.status == "budget":
            return EXIT_BUDGET
        return EXIT_OK if out.status == "sat" else EXIT_NEGATIVE
    result = crossing_number(g, budget=budget)
    if args.json:
        payload = {
            "value": result.value,
            "lower_bound": result.lower_bound,
            "upper_bound": result.upper_bound,
            "nodes": result.nodes,
            "planarity_calls": result.planarity_calls,
            "infeasible_trace": list(result.infeasible_trace),
        }
        if result.witness is not None:
            payload["witness"] = drawing_to_json_dict(result.witness)
        print(json.dumps(payload))
    else:
        if result.exact:
            print(f"crossing number = {result.value}")
        else:
            hi = result.upper_bound if result.upper_bound is not None else "?"
            print(f"budget exhausted: crossing number in [{result.lower_bound}, {hi}]")
    return EXIT_OK if result.exact else EXIT_BUDGET


def cmd_verify(args) -> int:
    if args.kind == "drawing":
        try:
            d = drawing_from_json(_read_text(args.file))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        res = validate_drawing(d)
        if res.valid:
            print(f"valid drawing with {d.crossing_total} crossings")
            return EXIT_OK
        print(f"invalid: {res.reason}")
        return EXIT_NEGATIVE
    if args.kind == "coloring":
        try:
            obj = json.loads(_read_text(args.file))
            coloring = Coloring(tuple(obj["colors"]), int(obj["palette"]))
            g = _load_graph(args)
        except (ValueError, KeyError, TypeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        if len(coloring.assignment) != g.vertex_count:
            print("invalid: clause 'total' (wrong number of colors)")
            return EXIT_NEGATIVE
        if any(not (1 <= c <= coloring.palette) for c in coloring.assignment):
            print("invalid: clause 'palette' (color out of range)")
            return EXIT_NEGATIVE
        if not verify_coloring(g, coloring):
            print("invalid: clause 'proper' (a monochromatic edge exists)")
            return EXIT_NEGATIVE
        print(f"valid proper coloring with palette {coloring.palette}")
        return EXIT_OK
    # immersion
    try:
        cert = immersion_from_json_dict(json.loads(_read_text(args.file)))
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    problem = explain_immersion(cert, essential=args.essential,
                                v_immersion=args.v_immersion,
                                embedding=args.embedding, onto=args.onto)
    if problem is None:
        print("valid immersion certificate")
        return EXIT_OK
    print(f"invalid: {problem}")
    return EXIT_NEGATIVE


def cmd_gen_corpus(args) -> int:
    exclude = []
    if args.exclude:
        for name in args.exclude.split(";"):
            exclude.append(construct_named(name))
    spec = corpus_mod.CorpusSpec(
        seed=args.seed, count=args.count, n_min=args.n_min, n_max=args.n_max,
        crossing_cap=args.cap, omega_max=args.omega_max,
        connectivity_min=args.connectivity_min, exclude=tuple(exclude),
        per_graph_budget=args.budget_per_graph,
        density_offset=args.density_offset)
    entries = corpus_mod.gen_corpus(spec)
    corpus_mod.save_corpus(args.out, spec, entries)
    print(f"wrote {len(entries)} annotated graphs to {args.out}")
    return EXIT_OK


def cmd_check(args) -> int:
    only = args.only.split(",") if args.only else None

    def echo(result):
        status = "PASS" if result.passed else "FAIL"
        print(f"[{status}] {result.claim_id}: {result.title} "
              f"({result.elapsed:.1f}s) - {result.detail}", flush=True)

    results = report_mod.run_claims(only=only, extended=args.extended,
                                    echo=None if args.json else echo)
    if args.json:
        print(json.dumps(report_mod.results_json(results), indent=2))
    if args.out:
        paths = report_mod.write_report(results, args.out,
                                        with_figures=not args.no_figures)
        if not args.json:
            written = [paths["csv"], paths["json"]] + paths["figures"]
            print("report files: " + ", ".join(written))
    if not results:
        print("no claims selected", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cross5",
        description="5-coloring of low-crossing graphs and exact crossing "
                    "numbers of small graphs, with checkable certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="5-color a graph or produce an obstruction")
    _add_graph_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_color)

    p = sub.add_parser("nu", help="exact crossing number, bounded decision, "
                                  "or exhaustive enumeration")
    _add_graph_args(p)
    p.add_argument("--exact", action="store_true", help="compute the exact value (default)")
    p.add_argument("--le", type=int, metavar="K", help="decide whether a drawing with at most K crossings exists")
    p.add_argument("--enumerate-good", type=int, metavar="K", help="enumerate all good drawings with exactly K crossings")
    p.add_argument("--budget", type=int, help="planarity-call budget (default CROSS5_BUDGET or 10^7)")
    p.add_argument("--mode", choices=["good-only", "any-drawing"], default="good-only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_nu)

    p = sub.add_parser("verify", help="check a drawing, coloring, or immersion certificate")
    p.add_argument("kind", choices=["drawing", "coloring", "immersion"])
    p.add_argument("file", help="certificate JSON file, '-' for stdin")
    p.add_argument("--named", help="graph for coloring verification")
    p.add_argument("--input", help="graph file for coloring verification")
    p.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto")
    p.add_argument("--essential", action="store_true")
    p.add_argument("--v-immersion", action="store_true")
    p.add_argument("--embedding", action="store_true")
    p.add_argument("--onto", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen-corpus", help="generate a seeded, solver-verified corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--cap", type=int, default=2, help="crossing-number cap (0..3)")
    p.add_argument("--omega-max", type=int)
    p.add_argument("--connectivity-min", type=int)
    p.add_argument("--exclude", help="semicolon-separated named graphs to exclude up to isomorphism")
    p.add_argument("--budget-per-graph", type=int, default=400_000)
    p.add_argument("--density-offset", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_gen_corpus)

    p = sub.add_parser("check", help="run every pinned claim and write a report")
    p.add_argument("--out", help="directory for claims.csv, claims.json, and figures")
    p.add_argument("--json", action="store_true", help="print machine-readable results")
    p.add_argument("--extended", action="store_true",
                   help="also run the long exhaustive search claims")
    p.add_argument("--only", help="comma-separated claim ids")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(fn=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
