"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 instance error (bad input, size
bounds, disconnected graph), 3 invariant violation detected.
"""

from __future__ import annotations

import argparse
import sys

from .assemble import AssemblyError, approx_mist
from .audit import ratio_audit
from .corpus import load_corpus
from .cover import DEFAULT_EXACT_BOUND, SizeBoundError, format_cover, max_path_cycle_cover
from .generators import gen_random, gen_tight
from .graph import Graph, GraphFormatError, format_graph, format_tree, parse_graph, parse_tree, read_graph
from .oracle import DEFAULT_ORACLE_BOUND, OracleBoundError, exact_mist
from .reconstruct import ReconstructionError
from .reduce import (DisconnectedGraphError, ReductionTrace, TraceMismatchError, format_trace,
                     parse_trace, reduce_graph)

EXIT_OK, EXIT_USAGE, EXIT_INSTANCE, EXIT_INVARIANT = 0, 1, 2, 3

INSTANCE_ERRORS = (GraphFormatError, DisconnectedGraphError, SizeBoundError, OracleBoundError,
                   OSError, ValueError)
INVARIANT_ERRORS = (ReconstructionError, AssemblyError, TraceMismatchError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def format_reduce_output(g: Graph, g1: Graph, trace: ReductionTrace) -> str:
    kept = ",".join(str(v + 1) for v in trace.kept)
    return format_graph(g1, [f"original_n={g.n}", f"kept={kept}"]) + format_trace(trace)


def parse_reduce_output(text: str) -> tuple[Graph, ReductionTrace, list[int]]:
    """Inverse of format_reduce_output: (reduced graph, trace, kept labels 0-based)."""
    graph_lines, meta = [], {}
    for line in text.splitlines():
        head = line.split()[:1]
        if head in (["DE"], ["DL"]):
            continue
        if head == ["c"] and "=" in line:
            k, _, v = line[1:].strip().partition("=")
            meta[k] = v
        graph_lines.append(line)
    g1 = parse_graph("\n".join(graph_lines))
    n = int(meta.get("original_n", g1.n))
    kept = [int(x) - 1 for x in meta.get("kept", "").split(",") if x]
    return g1, parse_trace(text, n), kept


def _stats_text(stats: dict) -> str:
    return "".join(f"{k}={v}\n" for k, v in stats.items())


def cmd_reduce(args) -> int:
    g = read_graph(args.input)
    g1, trace = reduce_graph(g)
    sys.stdout.write(format_reduce_output(g, g1, trace))
    return EXIT_OK


def cmd_cover(args) -> int:
    g = read_graph(args.input)
    h = max_path_cycle_cover(g, args.mode, min_cycle=args.min_cycle, bound=args.bound)
    sys.stdout.write(format_cover(h))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = read_graph(args.input)
    t, stats = approx_mist(g, args.mode, args.bound)
    stats = {"mode": "approx", **stats}
    sys.stdout.write(format_tree(t, stats))
    if args.stats:
        with open(args.stats, "w") as fh:
            fh.write(_stats_text(stats))
    if not t.spans(g):
        print("error: output is not a spanning tree", file=sys.stderr)
        return EXIT_INVARIANT
    if args.mode == "exact" and stats.get("alpha_violations", 0):
        print("error: 3/4 invariant violated during assembly", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_exact(args) -> int:
    g = read_graph(args.input)
    t, count = exact_mist(g, args.bound)
    sys.stdout.write(format_tree(t, {"mode": "exact-oracle", "n": g.n, "m": g.m,
                                     "internal": count}))
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    with open(args.tree) as fh:
        t, _ = parse_tree(fh.read(), g.n)
    problems = t.problems(g)
    if problems:
        for p in problems:
            print(f"invalid: {p}")
        return EXIT_INVARIANT
    print(f"valid internal={t.internal_count}")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "tight":
        g = gen_tight(args.k)
        comments = [f"tight family k={args.k}"]
    else:
        g = gen_random(args.n, args.m, args.seed)
        comments = [f"random n={args.n} m={args.m} seed={args.seed}"]
    sys.stdout.write(format_graph(g, comments))
    return EXIT_OK


def cmd_audit(args) -> int:
    instances = load_corpus(args.corpus)
    summary = ratio_audit(instances, oracle=args.oracle, cover_mode=args.mode,
                          on_record=lambda r: print(r.line(), flush=True))
    print(summary.line())
    if summary.violations or (args.mode == "exact" and summary.alpha_violations):
        return EXIT_INVARIANT
    if summary.errors:
        return EXIT_INSTANCE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mist", description="Approximate maximum internal spanning trees.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("reduce", help="apply the safe reductions, print graph and trace")
    s.add_argument("input")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("cover", help="maximum path-cycle cover")
    s.add_argument("input")
    s.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    s.add_argument("--min-cycle", type=int, choices=[3, 4], default=4)
    s.add_argument("--bound", type=int, default=DEFAULT_EXACT_BOUND)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("solve", help="approximate maximum internal spanning tree")
    s.add_argument("input")
    s.add_argument("--mode", choices=["exact", "heuristic"], default="exact",
                   help="cover mode used by the pipeline")
    s.add_argument("--bound", type=int, default=DEFAULT_EXACT_BOUND)
    s.add_argument("--stats", metavar="OUT")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("exact", help="exact maximum internal spanning tree (small graphs)")
    s.add_argument("input")
    s.add_argument("--bound", type=int, default=DEFAULT_ORACLE_BOUND)
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("check", help="validate a spanning tree against a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--tree", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="generate instances")
    fam = s.add_subparsers(dest="family", required=True, parser_class=_Parser)
    t = fam.add_parser("tight", help="chained squares")
    t.add_argument("--k", type=int, required=True)
    r = fam.add_parser("random", help="random connected graph")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("audit", help="ratio audit over a corpus")
    s.add_argument("--corpus", required=True,
                   help="e.g. exhaustive:7, tight:2-25, random:n=10,m=15,count=500,seed=1")
    s.add_argument("--oracle", action="store_true", help="compare with the exact optimum")
    s.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    s.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    try:
        return args.func(args)
    except INVARIANT_ERRORS as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except INSTANCE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INSTANCE


if __name__ == "__main__":
    sys.exit(main())
