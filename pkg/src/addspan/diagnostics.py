"""Brute-force spanner verification, potential/cost functions and trace-level
invariant checks."""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .graph import UNREACHABLE, Graph, apsp

if TYPE_CHECKING:
    from .engine import CompletionTrace, SubgraphState


class TraceContractError(ValueError):
    """Trace was not recorded with the slack/cost convention a check needs."""


@dataclass(frozen=True)
class Violation:
    """A pair whose subgraph distance exceeds the additive budget.

    ``d_h`` is UNREACHABLE when the pair is disconnected in H; ``excess`` is
    then infinite.
    """

    u: int
    v: int
    d_g: int
    d_h: int
    excess: float


@dataclass(frozen=True)
class PotentialReport:
    """Potential/cost snapshot of one subgraph state."""

    v: int
    c_edges: int
    c_degsq: int
    slack: int


@dataclass(frozen=True)
class StepRatioReport:
    """Per-step potential-gain per edge for a 6-spanner trace; reported,
    never asserted (the analysis hides its constant)."""

    ratios: list[float]
    minimum: float
    median: float
    n_two_thirds: float


def verify_spanner(g: Graph, h: "SubgraphState", k: int) -> list[Violation]:
    """Exact check of d_H(u, v) <= d_G(u, v) + k for all pairs via full APSP
    on both graphs.  Pairs disconnected in G are skipped.  Empty result means
    H is a valid additive k-spanner."""
    dg = apsp(g).dist
    dh = apsp(h.to_graph()).dist
    bad = (dg != UNREACHABLE) & ((dh == UNREACHABLE) | (dh > dg + k))
    bad = np.triu(bad, k=1)
    out = []
    for u, v in np.argwhere(bad):
        u, v = int(u), int(v)
        d_h = int(dh[u, v])
        excess = math.inf if d_h == UNREACHABLE else float(d_h - dg[u, v])
        out.append(Violation(u, v, int(dg[u, v]), d_h, excess))
    return out


def potential_from_matrices(dg: np.ndarray, dh: np.ndarray, slack: int) -> int:
    """Sum over unordered distinct pairs of max(0, d_G - d_H + slack); pairs
    unreachable in either graph contribute 0."""
    n = dg.shape[0]
    if n < 2:
        return 0
    iu, iv = np.triu_indices(n, k=1)
    a, b = dg[iu, iv], dh[iu, iv]
    ok = (a != UNREACHABLE) & (b != UNREACHABLE)
    vals = np.maximum(a - b + slack, 0)
    return int(vals[ok].sum())


def potential_v(g: Graph, h: "SubgraphState", slack: int) -> int:
    """Potential of H against its host (see ``potential_from_matrices``)."""
    if slack < 0:
        raise ValueError("slack must be non-negative")
    return potential_from_matrices(apsp(g).dist, apsp(h.to_graph()).dist, slack)


def cost_edges(h: "SubgraphState") -> int:
    """Edge-count cost of H."""
    return h.edge_count


def cost_degsq(h: "SubgraphState") -> int:
    """Sum of squared H-degrees."""
    return sum(d * d for d in h.deg)


def potential_report(g: Graph, h: "SubgraphState", slack: int) -> PotentialReport:
    return PotentialReport(
        v=potential_v(g, h, slack),
        c_edges=cost_edges(h),
        c_degsq=cost_degsq(h),
        slack=slack,
    )


def check_cauchy_bound(h: "SubgraphState") -> bool:
    """n * (sum of squared degrees) >= 4 * m**2; exact algebra, so a False
    result signals an implementation bug."""
    return h.n * cost_degsq(h) >= 4 * h.edge_count ** 2


def check_2spanner_step_law(trace: "CompletionTrace") -> list[int]:
    """Per-step change of (squared-degree cost - 12 * potential) along a
    2-spanner trace.  The companion assertion is that every delta is <= 0."""
    if trace.k != 2 or trace.slack != 3 or trace.cost_kind != "degsq":
        raise TraceContractError(
            "step law needs a k=2 trace recorded with slack 3 and degsq cost"
        )
    if not trace.potentials_recorded:
        raise TraceContractError("trace was recorded without potentials")
    return [
        (s.c_after - 12 * s.v_after) - (s.c_before - 12 * s.v_before)
        for s in trace.steps
    ]


def measure_6spanner_step_ratio(trace: "CompletionTrace") -> StepRatioReport:
    """Per-step potential gain per new edge on a 6-spanner trace, with
    n**(2/3) for context."""
    if trace.k != 6 or trace.slack != 5 or trace.cost_kind != "edges":
        raise TraceContractError(
            "ratio report needs a k=6 trace recorded with slack 5 and edge cost"
        )
    if not trace.potentials_recorded:
        raise TraceContractError("trace was recorded without potentials")
    ratios = [
        (s.v_after - s.v_before) / (s.c_after - s.c_before) for s in trace.steps
    ]
    return StepRatioReport(
        ratios=ratios,
        minimum=min(ratios) if ratios else math.nan,
        median=statistics.median(ratios) if ratios else math.nan,
        n_two_thirds=trace.n ** (2 / 3),
    )
