"""Additive 2- and 6-spanners of unweighted undirected graphs via
shortest-path completion, with brute-force verification and per-step
potential diagnostics."""

from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    GraphFormatError,
    NoPathError,
    Path,
    apsp,
    bfs_distances,
    gen_gnp,
    gen_named,
    parse_edge_list,
    serialize_edge_list,
    shortest_path,
)
from .engine import (
    CompletionStep,
    CompletionTrace,
    SubgraphState,
    build_2_spanner,
    build_6_spanner,
    complete,
    default_cap,
    seed_degree_capped,
    seed_empty,
)
from .diagnostics import (
    PotentialReport,
    StepRatioReport,
    TraceContractError,
    Violation,
    check_2spanner_step_law,
    check_cauchy_bound,
    cost_degsq,
    cost_edges,
    measure_6spanner_step_ratio,
    potential_report,
    potential_v,
    verify_spanner,
)
from .cli import ExponentFit, SweepRecord, fit_exponent, run_sweep

__all__ = [
    "UNREACHABLE",
    "DistanceMatrix",
    "Graph",
    "GraphFormatError",
    "NoPathError",
    "Path",
    "apsp",
    "bfs_distances",
    "gen_gnp",
    "gen_named",
    "parse_edge_list",
    "serialize_edge_list",
    "shortest_path",
    "CompletionStep",
    "CompletionTrace",
    "SubgraphState",
    "build_2_spanner",
    "build_6_spanner",
    "complete",
    "default_cap",
    "seed_degree_capped",
    "seed_empty",
    "PotentialReport",
    "StepRatioReport",
    "TraceContractError",
    "Violation",
    "check_2spanner_step_law",
    "check_cauchy_bound",
    "cost_degsq",
    "cost_edges",
    "measure_6spanner_step_ratio",
    "potential_report",
    "potential_v",
    "verify_spanner",
    "ExponentFit",
    "SweepRecord",
    "fit_exponent",
    "run_sweep",
]
