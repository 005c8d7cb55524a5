from __future__ import annotations

import random
from dataclasses import dataclass

import pytest

from addspan import (
    CompletionTrace,
    Graph,
    SubgraphState,
    build_2_spanner,
    build_6_spanner,
    gen_gnp,
    gen_named,
)

GNP_PS = (0.1, 0.3, 0.5, 0.9)


def gnp_corpus_params(count: int = 200) -> list[tuple[int, float, int]]:
    """Deterministic (n, p, seed) grid: n in [5, 60], p cycling over GNP_PS."""
    return [(5 + (i * 13) % 56, GNP_PS[i % 4], i) for i in range(count)]


def named_corpus_graphs(max_n: int = 30) -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    sizes = (2, 3, 5, 9, 16, max_n)
    for fam in ("path", "star", "complete"):
        out.extend((f"{fam}-{n}", gen_named(fam, n)) for n in sizes)
    out.extend((f"cycle-{n}", gen_named("cycle", n)) for n in sizes if n >= 3)
    out.extend((f"grid-{s}", gen_named("grid", s)) for s in (2, 3, 4, 5))
    return out


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, ((rng.randrange(i), i) for i in range(1, n)))


@dataclass
class BuiltCase:
    label: str
    graph: Graph
    h2: SubgraphState
    trace2: CompletionTrace
    h6: SubgraphState
    trace6: CompletionTrace


@pytest.fixture(scope="session")
def corpus_graphs() -> list[tuple[str, Graph]]:
    graphs = [
        (f"gnp-n{n}-p{p}-s{s}", gen_gnp(n, p, s)) for n, p, s in gnp_corpus_params()
    ]
    graphs.extend(named_corpus_graphs())
    return graphs


@pytest.fixture(scope="session")
def built_corpus(corpus_graphs) -> list[BuiltCase]:
    """Both spanner pipelines over the whole corpus; 2-spanner traces carry
    potentials for the step-law check."""
    out = []
    for label, g in corpus_graphs:
        h2, tr2 = build_2_spanner(g, record_potentials=True)
        h6, tr6 = build_6_spanner(g)
        out.append(BuiltCase(label, g, h2, tr2, h6, tr6))
    return out
