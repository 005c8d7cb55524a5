"""Seed subgraphs and the additive-spanner completion loop.

``complete`` scans all unordered pairs in lexicographic order once; adding
path edges never increases any subgraph distance, so a single pass leaves no
violating pair behind.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .graph import (
    UNREACHABLE,
    Edge,
    Graph,
    Path,
    apsp,
    bfs_csr,
    canonical_edge,
    shortest_path,
)


class SubgraphState:
    """Mutable edge subset H of a fixed host graph G with degree bookkeeping.

    The node set always equals the host's; edges may only be host edges.
    """

    def __init__(self, host: Graph, edges: Iterable[tuple[int, int]] = ()):
        self.host = host
        self.deg: list[int] = [0] * host.n
        self._edges: set[Edge] = set()
        _, indices = host.csr
        self._mask = np.zeros(len(indices), dtype=bool)
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n(self) -> int:
        return self.host.n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edges

    def edges(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def add_edge(self, u: int, v: int) -> bool:
        """Insert a host edge into H; returns True iff it was new."""
        e = canonical_edge(u, v)
        if e in self._edges:
            return False
        slots = self.host.edge_slots.get(e)
        if slots is None:
            raise ValueError(f"edge {e} is not an edge of the host graph")
        self._edges.add(e)
        self._mask[slots[0]] = True
        self._mask[slots[1]] = True
        self.deg[e[0]] += 1
        self.deg[e[1]] += 1
        return True

    def bfs_row(self, source: int) -> np.ndarray:
        """Hop distances within H from ``source``."""
        indptr, indices = self.host.csr
        return bfs_csr(self.host.n, indptr, indices, source, mask=self._mask)

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.host.n, self._edges)

    def copy(self) -> "SubgraphState":
        return SubgraphState(self.host, self._edges)


@dataclass(frozen=True)
class CompletionStep:
    """One completion insertion: the violating pair and what it cost.

    ``d_h_before`` is UNREACHABLE when the pair was disconnected in H.
    Potential/cost snapshots are None unless the run recorded them.
    """

    pair: Edge
    d_g: int
    d_h_before: int
    path: Path
    new_edges: int
    v_before: Optional[int] = None
    v_after: Optional[int] = None
    c_before: Optional[int] = None
    c_after: Optional[int] = None


@dataclass
class CompletionTrace:
    """Ordered record of all completion steps of one run."""

    k: int
    n: int
    slack: int
    cost_kind: str  # "edges" or "degsq"
    seed_edge_count: int
    final_edge_count: int
    potentials_recorded: bool
    steps: list[CompletionStep] = field(default_factory=list)


def default_cap(n: int) -> int:
    """Exact integer floor of the cube root: largest c with c**3 <= n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    c = max(1, round(n ** (1 / 3)))
    while c ** 3 > n:
        c -= 1
    while (c + 1) ** 3 <= n:
        c += 1
    return c


def seed_empty(g: Graph) -> SubgraphState:
    """H with all nodes of g and no edges."""
    return SubgraphState(g)


def seed_degree_capped(g: Graph, cap: int) -> SubgraphState:
    """For each node pick its min(cap, deg) lowest-id incident edges; H is
    the union.  Guarantee: any node with H-degree below ``cap`` has all of
    its host edges present."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    selected: set[Edge] = set()
    for v in range(g.n):
        for w in g.adjacency[v][:cap]:
            selected.add(canonical_edge(v, w))
    return SubgraphState(g, selected)


def _slack_for(k: int) -> int:
    # 2- and 6-spanner analyses use slack 3 and 5 respectively; generic k
    # falls back to k - 1 (clamped), reported only.
    if k == 2:
        return 3
    if k == 6:
        return 5
    return max(k - 1, 0)


def complete(
    g: Graph,
    h: SubgraphState,
    k: int,
    *,
    record_potentials: bool = False,
) -> tuple[SubgraphState, CompletionTrace]:
    """k-spanner completion: while some pair (u, v) has
    d_H(u, v) > d_G(u, v) + k, insert the deterministic shortest u-v path
    of G into H.

    Pairs are scanned lexicographically in a single pass; disconnected pairs
    of G are skipped (H never connects what G does not).  Mutates and
    returns ``h`` together with the step trace.  With
    ``record_potentials`` every step snapshots the potential/cost values
    (slack 3 + squared-degree cost for k=2, slack 5 + edge count for k=6),
    at the price of one subgraph APSP per step.
    """
    if k < 0:
        raise ValueError("additive constant k must be non-negative")
    if h.host != g:
        raise ValueError("subgraph state does not belong to this graph")
    from .diagnostics import potential_from_matrices

    slack = _slack_for(k)
    cost_kind = "degsq" if k == 2 else "edges"

    def current_cost() -> int:
        if cost_kind == "degsq":
            return sum(d * d for d in h.deg)
        return h.edge_count

    dg = apsp(g).dist
    seed_edges = h.edge_count
    steps: list[CompletionStep] = []
    v_cur: Optional[int] = None
    c_cur: Optional[int] = None
    if record_potentials:
        v_cur = potential_from_matrices(dg, apsp(h.to_graph()).dist, slack)
        c_cur = current_cost()

    for u in range(g.n):
        dg_row = dg[u]
        row = h.bfs_row(u)
        while True:
            viol = np.nonzero(
                (dg_row != UNREACHABLE)
                & ((row == UNREACHABLE) | (row > dg_row + k))
            )[0]
            viol = viol[viol > u]
            if viol.size == 0:
                break
            v = int(viol[0])
            path = shortest_path(g, u, v, distances=dg_row)
            added = 0
            for a, b in path.hops():
                added += h.add_edge(a, b)
            # a violating pair always contributes at least one missing edge
            assert added >= 1
            v_after = c_after = None
            if record_potentials:
                v_after = potential_from_matrices(dg, apsp(h.to_graph()).dist, slack)
                c_after = current_cost()
            steps.append(
                CompletionStep(
                    pair=(u, v),
                    d_g=int(dg_row[v]),
                    d_h_before=int(row[v]),
                    path=path,
                    new_edges=added,
                    v_before=v_cur,
                    v_after=v_after,
                    c_before=c_cur,
                    c_after=c_after,
                )
            )
            v_cur, c_cur = v_after, c_after
            row = h.bfs_row(u)

    trace = CompletionTrace(
        k=k,
        n=g.n,
        slack=slack,
        cost_kind=cost_kind,
        seed_edge_count=seed_edges,
        final_edge_count=h.edge_count,
        potentials_recorded=record_potentials,
        steps=steps,
    )
    return h, trace


def build_2_spanner(
    g: Graph, *, record_potentials: bool = False
) -> tuple[SubgraphState, CompletionTrace]:
    """Additive 2-spanner: empty seed, then completion with k=2."""
    return complete(g, seed_empty(g), 2, record_potentials=record_potentials)


def build_6_spanner(
    g: Graph, *, record_potentials: bool = False
) -> tuple[SubgraphState, CompletionTrace]:
    """Additive 6-spanner: degree-capped seed (cap = floor cube root of n),
    then completion with k=6."""
    cap = default_cap(g.n) if g.n >= 1 else 0
    return complete(g, seed_degree_capped(g, cap), 6, record_potentials=record_potentials)
