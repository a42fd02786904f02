"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
error (unreadable or malformed graph, infeasible generator), 4 output cap
reached under ``--strict-cap``.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Sequence

from .bench import DEFAULT_CAP, DEFAULT_SWEEP, GenSpecError, build_graph, expand_spec, parse_spec, run_bench, write_csv
from .cycles import enumerate_chordless_cycles, enumerate_chordless_cycles_through
from .graph import Graph
from .io import EdgeListError, SolutionWriter, format_edge_list, read_edge_list
from .oracle import DEFAULT_LIMIT, AdjacencyMatrix, brute_cycles, brute_paths, count_all_cycles, is_chordless
from .paths import enumerate_chordless_st_paths

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CAPPED = 4


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="edge-list file, one 'label label' edge per line")
    src.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. gnp:n=20,p=0.3 or sparse:n=50,deg=4")
    common.add_argument("--seed", type=int, default=0, help="seed for random generators (default 0)")
    common.add_argument("--max-len", type=_positive, metavar="K", help="edge bound on reported paths/cycles")
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP, metavar="N", help="stop after N outputs")
    common.add_argument("--count-only", action="store_true", help="print only the count trailer")
    common.add_argument("--verify", action="store_true", help="re-check every output for chords")
    common.add_argument("--strict-cap", action="store_true", help="exit with status 4 when the cap is hit")
    common.add_argument("--no-output", action="store_true", help="skip formatting outputs (pure enumeration timing)")
    common.add_argument("--jobs", type=_positive, default=1, metavar="K", help="parallel bench instances")

    parser = argparse.ArgumentParser(prog="chordless", description="Enumerate chordless paths and cycles.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("paths", parents=[common], help="chordless s-t paths")
    p.add_argument("--s", required=True, metavar="L")
    p.add_argument("--t", required=True, metavar="L")
    sub.add_parser("cycles", parents=[common], help="all chordless cycles")
    p = sub.add_parser("through", parents=[common], help="chordless cycles through one vertex")
    p.add_argument("--v", required=True, metavar="L")
    sub.add_parser("count", parents=[common], help="chordless vs all cycle counts")
    sub.add_parser("gen", parents=[common], help="print a generated graph as an edge list")
    sub.add_parser("bench", parents=[common], help="timed sweep, CSV on stdout")
    p = sub.add_parser("verify", parents=[common], help="check outputs against the brute-force oracle")
    p.add_argument("--s", metavar="L")
    p.add_argument("--t", metavar="L")
    return parser


def _load(args) -> tuple[Graph, list[str]]:
    if args.input is not None:
        try:
            return read_edge_list(args.input)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        except EdgeListError as exc:
            raise InputError(f"{args.input}: {exc}") from None
    if args.gen is not None:
        try:
            family, params = parse_spec(args.gen, args.seed)
        except GenSpecError as exc:
            raise UsageError(str(exc)) from None
        try:
            g = build_graph(family, params)
        except GenSpecError as exc:
            raise InputError(str(exc)) from None
        return g, [str(v) for v in range(g.n)]
    raise UsageError("one of --input or --gen is required")


def _vertex(labels: list[str], label: str, flag: str) -> int:
    try:
        return labels.index(label)
    except ValueError:
        raise UsageError(f"{flag} {label!r} is not a vertex label of the input") from None


def _enumerate(args, g: Graph, labels: list[str], out) -> int:
    writer = SolutionWriter(out, labels, count_only=args.count_only)
    closed = args.command != "paths"
    matrix = AdjacencyMatrix.from_graph(g) if args.verify else None
    violations = 0
    quiet = args.no_output

    def sink(seq):
        nonlocal violations
        if matrix is not None and not is_chordless(matrix, seq, closed=closed):
            violations += 1
            print(f"chord found in {' '.join(labels[v] for v in seq)}", file=sys.stderr)
        if quiet:
            writer.count += 1
        else:
            writer.write(seq)

    start = time.perf_counter()
    if args.command == "paths":
        s, t = _vertex(labels, args.s, "--s"), _vertex(labels, args.t, "--t")
        if s == t:
            raise UsageError("--s and --t must differ")
        stats = enumerate_chordless_st_paths(g, s, t, sink, max_edges=args.max_len, cap=args.cap)
    elif args.command == "through":
        v = _vertex(labels, args.v, "--v")
        stats = enumerate_chordless_cycles_through(g, v, sink, max_len=_cycle_bound(args), cap=args.cap)
    else:
        stats = enumerate_chordless_cycles(g, sink, max_len=_cycle_bound(args), cap=args.cap)
    elapsed_ms = (time.perf_counter() - start) * 1000
    writer.finish(elapsed_ms, capped=stats.capped)
    if violations:
        return EXIT_VERIFY
    if stats.capped and args.strict_cap:
        return EXIT_CAPPED
    return EXIT_OK


def _cycle_bound(args) -> int | None:
    if args.max_len is not None and args.max_len < 3:
        raise UsageError("--max-len for cycles must be at least 3")
    return args.max_len


def _count(args, g: Graph, out) -> int:
    start = time.perf_counter()
    chordless = enumerate_chordless_cycles(g, lambda c: None, cap=args.cap)
    total = count_all_cycles(g, cap=args.cap)
    elapsed_ms = (time.perf_counter() - start) * 1000
    plus = "+" if total.saturated else ""
    cplus = "+" if chordless.capped else ""
    out.write(f"# chordless={chordless.outputs}{cplus} all={total.count}{plus} elapsed_ms={elapsed_ms:.3f}\n")
    if (chordless.capped or total.saturated) and args.strict_cap:
        return EXIT_CAPPED
    return EXIT_OK


def _verify(args, g: Graph, labels: list[str], out) -> int:
    matrix = AdjacencyMatrix.from_graph(g)
    seen: set[tuple[int, ...]] = set()
    problems = []

    if (args.s is None) != (args.t is None):
        raise UsageError("verify takes both --s and --t, or neither")
    closed = args.s is None

    def sink(seq):
        key = tuple(seq)
        if key in seen:
            problems.append(f"duplicate output {' '.join(labels[v] for v in seq)}")
        seen.add(key)
        if not is_chordless(matrix, seq, closed=closed):
            problems.append(f"chord found in {' '.join(labels[v] for v in seq)}")

    if closed:
        stats = enumerate_chordless_cycles(g, sink, cap=args.cap)
    else:
        s, t = _vertex(labels, args.s, "--s"), _vertex(labels, args.t, "--t")
        if s == t:
            raise UsageError("--s and --t must differ")
        stats = enumerate_chordless_st_paths(g, s, t, sink, cap=args.cap)
    oracle = "skipped"
    if g.n <= DEFAULT_LIMIT and not stats.capped:
        expected = brute_cycles(matrix) if closed else brute_paths(matrix, s, t)
        oracle = "match" if expected == seen else "MISMATCH"
        if expected != seen:
            problems.append(f"oracle found {len(expected)} solutions, enumerator {len(seen)}")
    for p in problems:
        print(p, file=sys.stderr)
    status = "ok" if not problems else "FAILED"
    out.write(f"# verify={status} count={stats.outputs} oracle={oracle}\n")
    return EXIT_OK if not problems else EXIT_VERIFY


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bench":
            spec = args.gen or DEFAULT_SWEEP
            try:
                instances = expand_spec(spec, args.seed)
            except GenSpecError as exc:
                raise UsageError(str(exc)) from None
            try:
                reports = run_bench(instances, cap=args.cap, max_len=args.max_len, verify=args.verify, jobs=args.jobs)
            except GenSpecError as exc:
                raise InputError(str(exc)) from None
            write_csv(reports, out)
            if any(r.violations for r in reports):
                return EXIT_VERIFY
            if args.strict_cap and any(r.capped for r in reports):
                return EXIT_CAPPED
            return EXIT_OK
        g, labels = _load(args)
        if args.command == "gen":
            out.write(format_edge_list(g, labels))
            return EXIT_OK
        if args.command == "count":
            return _count(args, g, out)
        if args.command == "verify":
            return _verify(args, g, labels, out)
        return _enumerate(args, g, labels, out)
    except UsageError as exc:
        print(f"chordless: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"chordless: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
