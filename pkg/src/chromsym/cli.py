"""Command line entry point: ``chromsym <command> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import graph as G
from .csf import ALGORITHMS, CrossCheckError
from .families import (
    CASE_FILTERS,
    ENUM_HARD_LIMIT,
    PYRAMID_LIMIT,
    EnumerationLimitError,
    enumerate_up_to,
    k4_oval_bound_check,
    pyramid_sweep,
    run_case_check,
)
from .fourvertex import FourVertexKind, parse_kinds
from .graph import Graph, GraphError
from .graph6 import encode, read_graph6
from .report import build_report, free_check, tsv_header
from .verify import battery_passed, run_battery

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


class UsageError(Exception):
    pass


# -- inputs -----------------------------------------------------------------------

def named_graph(name: str) -> Graph:
    """Resolve a graph name such as ``claw``, ``cycle:5`` or ``pyramid:2,1,1``."""
    key = name.strip().lower()
    if key in ("three-sun", "three_sun"):
        return G.three_sun()
    if ":" in key:
        family, _, arg = key.partition(":")
        try:
            args = [int(a) for a in arg.split(",")]
        except ValueError:
            raise UsageError(f"bad size in graph name {name!r}") from None
        builders = {"path": G.path, "cycle": G.cycle, "complete": G.complete, "empty": G.empty}
        try:
            if family in builders and len(args) == 1:
                return builders[family](args[0])
            if family == "pyramid" and len(args) == 3:
                return G.generalized_pyramid(*args)
        except (GraphError, ValueError) as exc:
            raise UsageError(f"{name}: {exc}") from None
        raise UsageError(f"unknown graph family in {name!r}")
    try:
        return FourVertexKind.parse(key).prototype
    except ValueError:
        raise UsageError(f"unknown graph name {name!r}") from None


def sniff_format(text: str) -> str:
    for line in text.splitlines():
        toks = line.split()
        if not toks or toks[0].startswith("#"):
            continue
        if len(toks) == 2 and all(t.lstrip("-").isdigit() for t in toks):
            return "edges"
        return "graph6"
    return "graph6"


def load_graphs(args) -> list[Graph]:
    graphs: list[Graph] = []
    for name in args.name or []:
        graphs.append(named_graph(name))
    if args.input:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="ascii", errors="replace") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {args.input}: {exc}") from None
        fmt = args.format or sniff_format(text)
        graphs.extend(G.parse_edge_lists(text) if fmt == "edges" else read_graph6(text))
    if not graphs:
        raise UsageError("no graphs given (use --name or --input)")
    if args.limit is not None:
        graphs = graphs[: args.limit]
    return graphs


def kinds_arg(text: str | None) -> list[FourVertexKind]:
    if not text:
        return []
    try:
        return parse_kinds(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output -----------------------------------------------------------------------

def emit_reports(reports, args, out=None) -> None:
    out = out or sys.stdout
    if args.tsv:
        print(tsv_header(), file=out)
    for rep in reports:
        print(rep.tsv_row() if args.tsv else rep.dumps(timings=args.timings), file=out)


def compute_reports(graphs, args):
    work = partial(build_report, algorithm=args.algorithm, cross_check=args.cross_check,
                   dense_fraction=1 / 3 if args.dense_switch else None)
    if args.threads and args.threads > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            # map keeps input order whatever the completion order
            yield from pool.map(work, graphs, chunksize=max(1, len(graphs) // (4 * args.threads)))
    else:
        for g in graphs:
            yield work(g)


# -- commands ---------------------------------------------------------------------

def cmd_compute(args) -> int:
    graphs = load_graphs(args)
    emit_reports(compute_reports(graphs, args), args)
    return EXIT_OK


def cmd_free_check(args) -> int:
    kinds = kinds_arg(args.free)
    if not kinds:
        raise UsageError("--free needs at least one four-vertex graph name")
    for g in load_graphs(args):
        print(json.dumps(free_check(g, kinds)))
    return EXIT_OK


def cmd_survey(args) -> int:
    kinds = kinds_arg(args.free)
    try:
        graphs = list(enumerate_up_to(args.n, kinds, allow_large=args.allow_large))
    except EnumerationLimitError as exc:
        raise UsageError(str(exc)) from None
    if args.connected:
        graphs = [g for g in graphs if g.is_connected()]
    if args.limit is not None:
        graphs = graphs[: args.limit]
    reports = list(compute_reports(graphs, args))
    shown = [r for r in reports if not (args.only_failures and r.e_positive)]
    emit_reports(shown, args)
    bad = sum(1 for r in reports if not r.e_positive)
    print(f"survey n<={args.n} free_of={[k.value for k in kinds]}: {len(reports)} graphs, "
          f"{len(reports) - bad} e-positive, {bad} not e-positive", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    def show(res):
        print(res.line(), flush=True)

    results = run_battery(show)
    ok = battery_passed(results)
    failed = [r.key for r in results if not r.exploratory and not r.passed]
    print(f"battery: {'PASS' if ok else 'FAIL'} ({len(results) - len(failed)}/{len(results)} ok"
          + (f"; failed {', '.join(failed)}" if failed else "") + ")")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_case_check(args) -> int:
    variants = args.variants.split(",")
    unknown = [v for v in variants if v not in CASE_FILTERS]
    if unknown:
        raise UsageError(f"unknown variant(s) {unknown}; expected {sorted(CASE_FILTERS)}")
    rep = run_case_check(variants)
    print(json.dumps(rep.to_json(), indent=2 if args.pretty else None))
    return EXIT_OK if rep.all_e_positive else EXIT_VERIFY


def cmd_pyramid_sweep(args) -> int:
    if not 3 <= args.max_total <= PYRAMID_LIMIT:
        raise UsageError(f"--max-total must be between 3 and {PYRAMID_LIMIT}")
    rows = pyramid_sweep(args.max_total)
    if args.tsv:
        print("p\tq\tr\tn\te_positive\ts_positive")
    for r in rows:
        if args.tsv:
            print(f"{r.p}\t{r.q}\t{r.r}\t{r.n}\t{str(r.e_positive).lower()}\t{str(r.s_positive).lower()}")
        else:
            print(json.dumps({"p": r.p, "q": r.q, "r": r.r, "n": r.n, "e_positive": r.e_positive,
                              "s_positive": r.s_positive,
                              "e_witness": list(r.e_witness) if r.e_witness else None,
                              "exploratory": True}))
    bad = [r for r in rows if not r.e_positive]
    if bad:
        print(f"POTENTIAL COUNTEREXAMPLE: {len(bad)} pyramid(s) not e-positive", file=sys.stderr)
    return EXIT_OK


def cmd_k4_bound(args) -> int:
    print(json.dumps(k4_oval_bound_check(args.max_n).to_json()))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    kinds = kinds_arg(args.free)
    try:
        graphs = enumerate_up_to(args.n, kinds, start=args.n if args.exact else 1,
                                 allow_large=args.allow_large)
        for i, g in enumerate(graphs):
            if args.limit is not None and i >= args.limit:
                break
            print(encode(g))
    except EnumerationLimitError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_explore_codiamond(args) -> int:
    kinds = [FourVertexKind.CLAW, FourVertexKind.CO_DIAMOND]
    try:
        graphs = list(enumerate_up_to(args.n, kinds, allow_large=args.allow_large))
    except EnumerationLimitError as exc:
        raise UsageError(str(exc)) from None
    reports = list(compute_reports(graphs, args))
    emit_reports([r for r in reports if not (args.only_failures and r.e_positive)], args)
    bad = [r.graph_id for r in reports if not r.e_positive]
    msg = f"(claw, co-diamond)-free n<={args.n}: {len(reports)} graphs, {len(bad)} not e-positive"
    if bad:
        msg = "POTENTIAL COUNTEREXAMPLE: " + msg + " " + " ".join(bad)
    print(msg + " [exploratory]", file=sys.stderr)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

def _input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="graph6 or edge-list file ('-' for stdin)")
    p.add_argument("--format", choices=("graph6", "edges"), help="input format (default: detect)")
    p.add_argument("--name", action="append", metavar="NAME",
                   help="named graph, e.g. claw, three-sun, cycle:5, pyramid:2,1,1 (repeatable)")
    p.add_argument("--limit", type=int, metavar="N", help="process at most N graphs")


def _compute_options(p: argparse.ArgumentParser) -> None:
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="JSON Lines output (default)")
    out.add_argument("--tsv", action="store_true", help="tab-separated output with a header row")
    p.add_argument("--algorithm", choices=ALGORITHMS, help="force one X_G algorithm")
    p.add_argument("--cross-check", action="store_true", help="recompute X_G by a second algorithm")
    p.add_argument("--dense-switch", action="store_true",
                   help="use deletion-contraction when |E| > n(n-1)/3")
    p.add_argument("--threads", type=int, default=1, metavar="K", help="worker processes")
    p.add_argument("--timings", action="store_true", help="include per-stage timings in JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromsym",
                                     description="Chromatic symmetric functions and e-positivity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="X_G expansions and verdicts for each input graph")
    _input_options(p)
    _compute_options(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("free-check", help="test H-freeness for four-vertex graphs H")
    _input_options(p)
    p.add_argument("--free", required=True, metavar="LIST", help="comma-separated names, e.g. claw,co-paw")
    p.set_defaults(func=cmd_free_check)

    p = sub.add_parser("survey", help="verdicts for every H-free graph up to n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--free", metavar="LIST", help="forbidden four-vertex graphs")
    p.add_argument("--connected", action="store_true", help="connected graphs only")
    p.add_argument("--only-failures", action="store_true", help="print only non-e-positive rows")
    p.add_argument("--allow-large", action="store_true", help=f"permit n up to {ENUM_HARD_LIMIT}")
    p.add_argument("--limit", type=int, metavar="N")
    _compute_options(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", aliases=["verify-paper"], help="run the acceptance battery")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("case-check", help="peculiar-graph case analysis with all counting conventions")
    p.add_argument("--variants", default="diamond,co-claw", help="comma-separated: diamond, co-claw")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_case_check)

    p = sub.add_parser("pyramid-sweep", help="e-positivity of generalized pyramids (exploratory)")
    p.add_argument("--max-total", type=int, default=12, help="largest vertex count")
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_pyramid_sweep)

    p = sub.add_parser("k4-bound", help="graphs with no triangle and no stable 3-set")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_k4_bound)

    p = sub.add_parser("enumerate", help="graph6 list of H-free isomorphism classes")
    p.add_argument("n", type=int)
    p.add_argument("--free", metavar="LIST")
    p.add_argument("--exact", action="store_true", help="only graphs with exactly n vertices")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--limit", type=int, metavar="N")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("explore-codiamond", help="(claw, co-diamond)-free sweep (exploratory)")
    p.add_argument("n", type=int)
    p.add_argument("--only-failures", action="store_true")
    p.add_argument("--allow-large", action="store_true")
    _compute_options(p)
    p.set_defaults(func=cmd_explore_codiamond)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chromsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"chromsym: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CrossCheckError as exc:
        print(f"chromsym: cross-check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"chromsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
