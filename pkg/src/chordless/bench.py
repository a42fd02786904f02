"""Benchmark harness: generator specs, timed runs and CSV reports.

A generator spec looks like ``family:key=value,key=value``.  In a bench
sweep any value may list alternatives separated by ``/``; the sweep is the
cartesian product, e.g. ``gnp:n=50/100,p=0.1/0.3``.
"""

from __future__ import annotations

import csv
import itertools
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import TextIO

from . import generators
from .cycles import enumerate_chordless_cycles
from .graph import Graph
from .oracle import AdjacencyMatrix, is_chordless

__all__ = [
    "BenchReport",
    "DEFAULT_CAP",
    "DEFAULT_SWEEP",
    "GenSpecError",
    "build_graph",
    "expand_spec",
    "parse_spec",
    "run_bench",
    "run_instance",
    "write_csv",
]

DEFAULT_CAP = 1_000_000
DEFAULT_SWEEP = "sparse:n=10/20/30/40/50,deg=4"


class GenSpecError(ValueError):
    pass


# family -> (builder, ordered parameter names with their types)
_FAMILIES = {
    "gnp": (generators.gnp, (("n", int), ("p", float))),
    "sparse": (generators.sparse_cycle_plus_chords, (("n", int), ("deg", float))),
    "complete": (generators.complete, (("n", int),)),
    "cycle": (generators.cycle, (("n", int),)),
    "path": (generators.path, (("n", int),)),
    "star": (generators.star, (("n", int),)),
    "wheel": (generators.wheel, (("n", int),)),
    "petersen": (generators.petersen, ()),
    "interval": (generators.interval_random, (("n", int),)),
}
_SEEDED = {"gnp", "sparse", "interval"}


def _split(spec: str) -> tuple[str, dict[str, list[str]]]:
    family, _, rest = spec.strip().partition(":")
    if family not in _FAMILIES:
        raise GenSpecError(f"unknown generator family {family!r}; known: {', '.join(_FAMILIES)}")
    raw: dict[str, list[str]] = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq or not value:
            raise GenSpecError(f"malformed parameter {item!r} in {spec!r}")
        raw[key.strip()] = value.strip().split("/")
    allowed = {name for name, _ in _FAMILIES[family][1]} | ({"seed"} if family in _SEEDED else set())
    unknown = set(raw) - allowed
    if unknown:
        raise GenSpecError(f"unknown parameter(s) {sorted(unknown)} for {family}")
    missing = {name for name, _ in _FAMILIES[family][1]} - set(raw)
    if missing:
        raise GenSpecError(f"missing parameter(s) {sorted(missing)} for {family}")
    return family, raw


def _convert(family: str, raw: dict[str, str], seed: int) -> dict:
    params = {}
    for name, kind in _FAMILIES[family][1]:
        try:
            params[name] = kind(raw[name])
        except ValueError:
            raise GenSpecError(f"{name}={raw[name]!r} is not a valid {kind.__name__}") from None
    if family in _SEEDED:
        try:
            params["seed"] = int(raw.get("seed", seed))
        except ValueError:
            raise GenSpecError(f"seed={raw['seed']!r} is not an integer") from None
    return params


def parse_spec(spec: str, seed: int = 0) -> tuple[str, dict]:
    """Parse a single-instance spec into (family, keyword parameters)."""
    family, raw = _split(spec)
    multi = [k for k, v in raw.items() if len(v) != 1]
    if multi:
        raise GenSpecError(f"parameter(s) {multi} list several values; only bench sweeps allow that")
    return family, _convert(family, {k: v[0] for k, v in raw.items()}, seed)


def expand_spec(spec: str, seed: int = 0) -> list[tuple[str, dict]]:
    family, raw = _split(spec)
    keys = list(raw)
    return [
        (family, _convert(family, dict(zip(keys, combo)), seed))
        for combo in itertools.product(*(raw[k] for k in keys))
    ]


def build_graph(family: str, params: dict) -> Graph:
    builder, signature = _FAMILIES[family]
    args = [params[name] for name, _ in signature]
    try:
        if family in _SEEDED:
            return builder(*args, seed=params["seed"])
        return builder(*args)
    except ValueError as exc:
        raise GenSpecError(f"{family}: {exc}") from None


@dataclass
class BenchReport:
    family: str
    n: int
    m: int
    param: str
    seed: int | None
    outputs: int
    capped: bool
    elapsed_s: float
    per_10k_s: float | None
    peak_journal: int
    iterations: int
    max_delay_edgescans: int
    violations: int


def normalized_time(elapsed_s: float, outputs: int) -> float | None:
    """Seconds per 10,000 outputs, or None when nothing was output."""
    if outputs == 0:
        return None
    return elapsed_s * 10_000 / outputs


def run_instance(
    family: str,
    params: dict,
    cap: int = DEFAULT_CAP,
    max_len: int | None = None,
    verify: bool = False,
) -> BenchReport:
    g = build_graph(family, params)
    violations = 0
    if verify:
        matrix = AdjacencyMatrix.from_graph(g)

        def sink(c):
            nonlocal violations
            if not is_chordless(matrix, c, closed=True):
                violations += 1
    else:

        def sink(c):
            return None

    start = time.perf_counter()
    stats = enumerate_chordless_cycles(g, sink, max_len=max_len, cap=cap)
    elapsed = time.perf_counter() - start
    param = ";".join(f"{k}={v}" for k, v in params.items() if k not in ("n", "seed"))
    return BenchReport(
        family=family,
        n=g.n,
        m=g.m,
        param=param,
        seed=params.get("seed"),
        outputs=stats.outputs,
        capped=stats.capped,
        elapsed_s=elapsed,
        per_10k_s=normalized_time(elapsed, stats.outputs),
        peak_journal=stats.peak_journal,
        iterations=stats.iterations,
        max_delay_edgescans=stats.max_delay_edgescans,
        violations=violations,
    )


def _run_packed(args):
    return run_instance(*args)


def run_bench(
    instances: Iterable[tuple[str, dict]],
    cap: int = DEFAULT_CAP,
    max_len: int | None = None,
    verify: bool = False,
    jobs: int = 1,
) -> list[BenchReport]:
    work = [(family, params, cap, max_len, verify) for family, params in instances]
    if jobs <= 1:
        return [_run_packed(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_packed, work))


def write_csv(reports: Sequence[BenchReport], stream: TextIO) -> None:
    names = [f.name for f in fields(BenchReport)]
    writer = csv.DictWriter(stream, fieldnames=names, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = asdict(r)
        row["elapsed_s"] = f"{r.elapsed_s:.6f}"
        row["per_10k_s"] = "" if r.per_10k_s is None else f"{r.per_10k_s:.6f}"
        row["seed"] = "" if r.seed is None else r.seed
        row["capped"] = str(r.capped).lower()
        writer.writerow(row)
