"""Immutable unweighted undirected graphs: construction, generators, edge-list
I/O and unweighted shortest-path machinery (BFS, APSP, deterministic paths).

Nodes are dense integer ids 0..n-1.  Distances are hop counts; unreachable
pairs carry the sentinel :data:`UNREACHABLE`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np

#: Sentinel stored in distance rows/matrices for unreachable pairs.
UNREACHABLE = -1

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list input: bad tokens, self-loops, ids out of range."""


class NoPathError(ValueError):
    """A path was requested between nodes in different components."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected unweighted graph.

    ``edges`` holds canonical pairs (u, v) with u < v; ``adjacency`` is a
    per-node tuple of neighbor ids sorted ascending.  Instances are immutable
    and safe for concurrent reads.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("node count must be non-negative")
        canon: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop on node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) outside node range 0..{n - 1}")
            canon.add(canonical_edge(u, v))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, frozenset(canon), tuple(tuple(sorted(a)) for a in adj))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form: (indptr, indices), neighbors sorted."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, neigh in enumerate(self.adjacency):
            indptr[v + 1] = indptr[v] + len(neigh)
        indices = np.empty(int(indptr[-1]), dtype=np.int64)
        for v, neigh in enumerate(self.adjacency):
            indices[indptr[v]:indptr[v + 1]] = neigh
        return indptr, indices

    @cached_property
    def edge_slots(self) -> dict[Edge, tuple[int, int]]:
        """Map each edge to its two directed positions in ``csr`` indices."""
        indptr, indices = self.csr
        first: dict[Edge, int] = {}
        slots: dict[Edge, tuple[int, int]] = {}
        for v in range(self.n):
            for i in range(int(indptr[v]), int(indptr[v + 1])):
                e = canonical_edge(v, int(indices[i]))
                if e in first:
                    slots[e] = (first[e], i)
                else:
                    first[e] = i
        return slots


@dataclass(frozen=True)
class DistanceMatrix:
    """n x n table of hop distances; UNREACHABLE marks disconnected pairs."""

    n: int
    dist: np.ndarray

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return int(self.dist[u, v])

    def row(self, u: int) -> np.ndarray:
        return self.dist[u]


@dataclass(frozen=True)
class Path:
    """A simple path as a node sequence; consecutive nodes are adjacent."""

    nodes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    def hops(self) -> Iterator[Edge]:
        return zip(self.nodes, self.nodes[1:])


# ---------------------------------------------------------------------------
# Parsing / serialization
# ---------------------------------------------------------------------------

def parse_edge_list(text: str, strict: bool = False) -> Graph:
    """Parse the edge-list format: optional header ``n <count>``, one edge
    ``u v`` per line, ``#`` comments.  Duplicate and reversed duplicate edges
    collapse; self-loops are rejected.

    With ``strict=True`` a header is mandatory and node ids must lie below the
    declared count; otherwise n is inferred as max(header n, 1 + max id).
    """
    header_n: Optional[int] = None
    edges: list[Edge] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n" and header_n is None and not edges:
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            header_n = int(tokens[1])
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative node id in {line!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop on node {u}")
        if strict and header_n is not None and (u >= header_n or v >= header_n):
            raise GraphFormatError(
                f"line {lineno}: node id beyond declared count {header_n}"
            )
        edges.append(canonical_edge(u, v))
        max_id = max(max_id, u, v)
    if strict and header_n is None:
        raise GraphFormatError("strict mode requires an 'n <count>' header")
    n = max(header_n or 0, max_id + 1)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical text form: header line, then edges u < v in sorted order."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Deterministic generators
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 pseudo-random stream.

    Fixed algorithm so that a seed reproduces the same graph on every
    platform and Python version.  Floats are drawn as 53-bit mantissas in
    [0, 1).
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0 ** -53


def _splitmix64_floats(seed: int, count: int) -> np.ndarray:
    """Vectorized splitmix64: the i-th output of SplitMix64(seed)."""
    with np.errstate(over="ignore"):
        states = np.uint64(seed & _MASK64) + np.arange(
            1, count + 1, dtype=np.uint64
        ) * np.uint64(_GOLDEN)
        z = states
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * 2.0 ** -53


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each candidate pair (u, v), u < v, scanned in lexicographic
    order, is included iff the next splitmix64 float is below p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability p={p} outside [0, 1]")
    if n < 0:
        raise ValueError("n must be non-negative")
    count = n * (n - 1) // 2
    draws = _splitmix64_floats(seed, count)
    iu, iv = np.triu_indices(n, k=1)
    keep = draws < p
    edges = zip(iu[keep].tolist(), iv[keep].tolist())
    return Graph.from_edges(n, edges)


def gen_named(family: str, n: int) -> Graph:
    """Standard families with canonical numbering: path, cycle, complete,
    star (center 0), grid (n = side length, n*n nodes row-major)."""
    if family == "path":
        if n < 1:
            raise ValueError("path requires n >= 1")
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle requires n >= 3")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if family == "complete":
        if n < 1:
            raise ValueError("complete requires n >= 1")
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if family == "star":
        if n < 1:
            raise ValueError("star requires n >= 1")
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))
    if family == "grid":
        if n < 1:
            raise ValueError("grid requires side length n >= 1")
        edges = []
        for r in range(n):
            for c in range(n):
                if c + 1 < n:
                    edges.append((r * n + c, r * n + c + 1))
                if r + 1 < n:
                    edges.append((r * n + c, (r + 1) * n + c))
        return Graph.from_edges(n * n, edges)
    raise ValueError(f"unknown family {family!r}")


NAMED_FAMILIES = ("path", "cycle", "complete", "star", "grid")


# ---------------------------------------------------------------------------
# BFS / APSP / deterministic shortest paths
# ---------------------------------------------------------------------------

def bfs_csr(
    n: int,
    indptr: np.ndarray,
    indices: np.ndarray,
    source: int,
    mask: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Level-synchronous BFS over a CSR adjacency; ``mask`` (over directed
    edge slots) restricts traversal to a subgraph."""
    dist = np.full(n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        cum = np.concatenate(([0], np.cumsum(counts)))
        idx = np.arange(total, dtype=np.int64) + np.repeat(starts - cum[:-1], counts)
        if mask is not None:
            idx = idx[mask[idx]]
        neigh = indices[idx]
        newly = np.unique(neigh[dist[neigh] == UNREACHABLE])
        if newly.size == 0:
            break
        d += 1
        dist[newly] = d
        frontier = newly
    return dist


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source`` to every node (UNREACHABLE where none)."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range 0..{g.n - 1}")
    indptr, indices = g.csr
    return bfs_csr(g.n, indptr, indices, source)


def apsp(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances.

    Computed by dense level-synchronous frontier expansion (boolean matrix
    products); row u equals ``bfs_distances(g, u)`` exactly.
    """
    n = g.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    if n == 0:
        return DistanceMatrix(0, dist)
    np.fill_diagonal(dist, 0)
    adj = np.zeros((n, n), dtype=np.float32)
    if g.edges:
        arr = np.array(g.sorted_edges(), dtype=np.int64)
        adj[arr[:, 0], arr[:, 1]] = 1.0
        adj[arr[:, 1], arr[:, 0]] = 1.0
    reached = np.eye(n, dtype=bool)
    frontier = (adj > 0) & ~reached
    d = 0
    while frontier.any():
        d += 1
        dist[frontier] = d
        reached |= frontier
        frontier = (frontier.astype(np.float32) @ adj > 0) & ~reached
    return DistanceMatrix(n, dist)


def shortest_path(
    g: Graph, u: int, v: int, distances: Optional[np.ndarray] = None
) -> Path:
    """Deterministic shortest u-v path.

    Tie-break: level-synchronous BFS from u whose parent rule picks, for each
    node, the lowest-id neighbor on the previous level.  Equivalently the
    path is reconstructed backwards from v choosing the smallest predecessor
    at each hop.  ``distances`` may supply a precomputed BFS row from u.
    """
    for x in (u, v):
        if not 0 <= x < g.n:
            raise ValueError(f"node {x} out of range 0..{g.n - 1}")
    row = bfs_distances(g, u) if distances is None else distances
    if row[v] == UNREACHABLE:
        raise NoPathError(f"no path from {u} to {v}")
    nodes = [v]
    cur, d = v, int(row[v])
    while d > 0:
        for x in g.adjacency[cur]:
            if row[x] == d - 1:
                cur = x
                break
        nodes.append(cur)
        d -= 1
    return Path(tuple(reversed(nodes)))
