"""Command-line surface: generate graphs, build/verify spanners, dump traces
and run size-scaling sweeps with a log-log exponent fit.

Exit codes: 0 success, 1 verification failure, 2 input contract failure.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path as FilePath
from typing import Optional, Sequence

import numpy as np

from .diagnostics import verify_spanner
from .engine import (
    CompletionTrace,
    SubgraphState,
    build_2_spanner,
    build_6_spanner,
    complete,
    seed_empty,
)
from .graph import (
    UNREACHABLE,
    Graph,
    GraphFormatError,
    NAMED_FAMILIES,
    gen_gnp,
    gen_named,
    parse_edge_list,
    serialize_edge_list,
)

TRACE_COLUMNS = [
    "step", "u", "v", "d_g", "d_h_before", "new_edges",
    "v_before", "v_after", "c_before", "c_after",
]
SWEEP_COLUMNS = [
    "family", "n", "p_or_param", "seed", "k", "input_edges", "seed_edges",
    "final_edges", "ratio_32", "ratio_43", "steps", "wall_time_ms",
]
VIOLATION_COLUMNS = ["u", "v", "d_g", "d_h", "excess"]


@dataclass(frozen=True)
class SweepRecord:
    """One benchmark row of a size-scaling sweep."""

    family: str
    n: int
    p_or_param: str
    seed: int
    k: int
    input_edges: int
    seed_edges: int
    final_edges: int
    ratio_32: float
    ratio_43: float
    steps: int
    wall_time_ms: float


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares fit of log(m) against log(n)."""

    slope: float
    intercept: float
    r2: float
    points: int


def fit_exponent(points: Sequence[tuple[int, int]]) -> ExponentFit:
    """Ordinary least squares on (log n, log m); needs >= 3 points with
    >= 3 distinct n and all m >= 1."""
    if len(points) < 3 or len({n for n, _ in points}) < 3:
        raise ValueError("exponent fit needs at least 3 points with distinct n")
    if any(m < 1 for _, m in points):
        raise ValueError("exponent fit needs all edge counts >= 1")
    x = np.log([n for n, _ in points])
    y = np.log([m for _, m in points])
    slope, intercept = np.polyfit(x, y, 1)
    pred = slope * x + intercept
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return ExponentFit(float(slope), float(intercept), r2, len(points))


def _load_graph(path: str) -> Graph:
    return parse_edge_list(FilePath(path).read_text(encoding="utf-8"))


def _write_trace_csv(path: str, trace: CompletionTrace) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for i, s in enumerate(trace.steps):
            writer.writerow([
                i, s.pair[0], s.pair[1], s.d_g, s.d_h_before, s.new_edges,
                s.v_before, s.v_after, s.c_before, s.c_after,
            ])


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "gnp":
            if args.p is None:
                raise ValueError("--p is required for family gnp")
            g = gen_gnp(args.n, args.p, args.seed)
        else:
            g = gen_named(args.family, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    FilePath(args.out).write_text(serialize_edge_list(g), encoding="utf-8")
    print(f"n={g.n} m={g.edge_count}")
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    k = args.k
    record = args.trace_out is not None
    if k == 2:
        h, trace = build_2_spanner(g, record_potentials=record)
    elif k == 6:
        h, trace = build_6_spanner(g, record_potentials=record)
    elif args.unsafe_k:
        h, trace = complete(g, seed_empty(g), k, record_potentials=record)
    else:
        print(
            "error: only k=2 and k=6 carry a size guarantee; "
            "pass --unsafe-k to run other values with an empty seed",
            file=sys.stderr,
        )
        return 2
    if not args.no_selfcheck:
        violations = verify_spanner(g, h, k)
        if violations:
            print(f"error: self-check found {len(violations)} violations", file=sys.stderr)
            return 1
    FilePath(args.out).write_text(serialize_edge_list(h.to_graph()), encoding="utf-8")
    if args.trace_out:
        _write_trace_csv(args.trace_out, trace)
    print(
        f"n={g.n} m_in={g.edge_count} m_seed={trace.seed_edge_count} "
        f"m_out={trace.final_edge_count} steps={len(trace.steps)}"
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.graph)
        s = _load_graph(args.spanner)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if s.n > g.n or not s.edges <= g.edges:
        print("error: spanner is not a subgraph of the input graph", file=sys.stderr)
        return 2
    h = SubgraphState(g, s.edges)
    violations = verify_spanner(g, h, args.k)
    if violations:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(VIOLATION_COLUMNS)
        for x in violations:
            writer.writerow([x.u, x.v, x.d_g, x.d_h, x.excess])
        return 1
    print(f"valid additive {args.k}-spanner")
    return 0


def run_sweep(
    family: str,
    n_values: Sequence[int],
    p_values: Sequence[Optional[float]],
    seeds: int,
    k: int,
) -> list[SweepRecord]:
    """Build one spanner per (n, p, seed) point; non-gnp families ignore p
    and seed (they are deterministic) and emit one row per n."""
    records = []
    for n in sorted(n_values):
        for p in p_values:
            for seed in range(seeds):
                if family == "gnp":
                    g = gen_gnp(n, p, seed)
                    p_str = repr(p)
                else:
                    if seed > 0 or p is not None:
                        continue
                    g = gen_named(family, n)
                    p_str = ""
                t0 = time.perf_counter()
                if k == 2:
                    _, trace = build_2_spanner(g)
                elif k == 6:
                    _, trace = build_6_spanner(g)
                else:
                    _, trace = complete(g, seed_empty(g), k)
                wall_ms = (time.perf_counter() - t0) * 1000.0
                m = trace.final_edge_count
                records.append(SweepRecord(
                    family=family,
                    n=g.n,
                    p_or_param=p_str,
                    seed=seed,
                    k=k,
                    input_edges=g.edge_count,
                    seed_edges=trace.seed_edge_count,
                    final_edges=m,
                    ratio_32=m / g.n ** 1.5,
                    ratio_43=m / g.n ** (4 / 3),
                    steps=len(trace.steps),
                    wall_time_ms=wall_ms,
                ))
    return records


def _cmd_sweep(args: argparse.Namespace) -> int:
    n_values = sorted({int(t) for t in args.n.split(",")})
    if args.family == "gnp":
        p_values: list[Optional[float]] = [float(t) for t in args.p.split(",")] if args.p else []
        if not p_values:
            print("error: --p is required for family gnp", file=sys.stderr)
            return 2
    else:
        p_values = [None]
    try:
        records = run_sweep(args.family, n_values, p_values, args.seeds, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    with open(args.out, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for r in records:
            writer.writerow([
                r.family, r.n, r.p_or_param, r.seed, r.k, r.input_edges,
                r.seed_edges, r.final_edges, f"{r.ratio_32:.6f}",
                f"{r.ratio_43:.6f}", r.steps, f"{r.wall_time_ms:.3f}",
            ])
    for p in p_values:
        group = [r for r in records if r.p_or_param == (repr(p) if p is not None else "")]
        if not group:
            continue
        label = f"family={args.family}" + (f" p={p}" if p is not None else "")
        points = [(r.n, r.final_edges) for r in group]
        try:
            fit = fit_exponent(points)
        except ValueError as exc:
            print(f"{label} k={args.k}: fit omitted ({exc})")
            continue
        print(
            f"{label} k={args.k}: slope={fit.slope:.4f} intercept={fit.intercept:.4f} "
            f"r2={fit.r2:.4f} points={fit.points} "
            f"max_ratio_32={max(r.ratio_32 for r in group):.4f} "
            f"max_ratio_43={max(r.ratio_43 for r in group):.4f}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addspan",
        description="Additive spanners of unweighted graphs by shortest-path completion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph and write its edge list")
    p_gen.add_argument("--family", required=True, choices=("gnp",) + NAMED_FAMILIES)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, default=None, help="edge probability (gnp only)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_build = sub.add_parser("build", help="build a spanner from an edge-list file")
    p_build.add_argument("--input", required=True)
    p_build.add_argument("--k", type=int, required=True)
    p_build.add_argument("--out", required=True)
    p_build.add_argument("--trace-out", default=None, help="write per-step CSV trace")
    p_build.add_argument("--unsafe-k", action="store_true",
                         help="allow k outside {2, 6} (empty seed, no size guarantee)")
    p_build.add_argument("--no-selfcheck", action="store_true",
                         help="skip the built-in spanner verification")
    p_build.set_defaults(func=_cmd_build)

    p_verify = sub.add_parser("verify", help="verify a spanner file against a graph file")
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("--spanner", required=True)
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="size-scaling sweep with log-log exponent fit")
    p_sweep.add_argument("--family", required=True, choices=("gnp",) + NAMED_FAMILIES)
    p_sweep.add_argument("--n", required=True, help="comma-separated node counts")
    p_sweep.add_argument("--p", default=None, help="comma-separated probabilities (gnp)")
    p_sweep.add_argument("--seeds", type=int, default=1, help="seeds per point (gnp)")
    p_sweep.add_argument("--k", type=int, default=2)
    p_sweep.add_argument("--out", required=True, help="CSV output path")
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
