import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addspan import (
    UNREACHABLE,
    Graph,
    GraphFormatError,
    NoPathError,
    apsp,
    bfs_distances,
    gen_gnp,
    gen_named,
    parse_edge_list,
    serialize_edge_list,
    shortest_path,
)
from addspan.graph import SplitMix64, _splitmix64_floats

from oracles import floyd_warshall, dist_matrix_to_float


@st.composite
def small_graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n < 2:
        return Graph.from_edges(n, [])
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=len(candidates)))
    return Graph.from_edges(n, edges)


class TestParsing:
    def test_basic(self):
        g = parse_edge_list("n 3\n0 1\n1 2")
        assert g.n == 3
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_duplicate_and_reverse_collapse(self):
        g = parse_edge_list("0 1\n1 0")
        assert g.n == 2
        assert g.edges == frozenset({(0, 1)})

    def test_self_loop_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("0 0")

    def test_malformed_token_reports_line(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("0 1\n0 x")

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# comment\n\nn 4\n0 1\n# trailing\n2 3\n")
        assert g.n == 4
        assert g.edges == frozenset({(0, 1), (2, 3)})

    def test_n_inferred_from_ids(self):
        assert parse_edge_list("0 7").n == 8

    def test_strict_requires_header(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("0 1", strict=True)

    def test_strict_rejects_out_of_range(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("n 2\n0 5", strict=True)

    def test_serialize_simple(self):
        assert serialize_edge_list(Graph.from_edges(2, [(0, 1)])) == "n 2\n0 1\n"

    def test_serialize_empty(self):
        assert serialize_edge_list(Graph.from_edges(3, [])) == "n 3\n"

    @given(small_graphs())
    def test_roundtrip_identity(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g

    @given(small_graphs())
    def test_serialize_is_canonical_fixpoint(self, g):
        s = serialize_edge_list(g)
        assert serialize_edge_list(parse_edge_list(s)) == s


class TestGenerators:
    def test_gnp_p_zero(self):
        assert gen_gnp(5, 0.0, 123).edge_count == 0

    def test_gnp_p_one_is_complete(self):
        assert gen_gnp(5, 1.0, 99).edge_count == 10

    def test_gnp_reproducible(self):
        a = gen_gnp(100, 0.1, 42)
        b = gen_gnp(100, 0.1, 42)
        assert a == b
        assert 0 <= a.edge_count <= 4950

    def test_gnp_seed_changes_graph(self):
        assert gen_gnp(30, 0.5, 1) != gen_gnp(30, 0.5, 2)

    def test_gnp_p_out_of_range(self):
        with pytest.raises(ValueError):
            gen_gnp(5, 1.5, 0)

    def test_splitmix_scalar_matches_vectorized(self):
        rng = SplitMix64(987654321)
        scalar = [rng.next_float() for _ in range(200)]
        vec = _splitmix64_floats(987654321, 200)
        assert scalar == vec.tolist()

    def test_named_cycle(self):
        g = gen_named("cycle", 5)
        assert g.n == 5 and g.edge_count == 5

    def test_named_complete(self):
        assert gen_named("complete", 4).edge_count == 6

    def test_named_star(self):
        assert gen_named("star", 4).edges == frozenset({(0, 1), (0, 2), (0, 3)})

    def test_named_grid(self):
        g = gen_named("grid", 3)
        assert g.n == 9 and g.edge_count == 12

    def test_named_minimums(self):
        with pytest.raises(ValueError):
            gen_named("cycle", 2)
        with pytest.raises(ValueError):
            gen_named("unknown", 4)


class TestGraphInvariants:
    @given(small_graphs())
    def test_adjacency_consistent(self, g):
        for v, neigh in enumerate(g.adjacency):
            assert list(neigh) == sorted(neigh)
            for w in neigh:
                assert v in g.adjacency[w]
                assert (min(v, w), max(v, w)) in g.edges
        assert g.edge_count * 2 == sum(len(a) for a in g.adjacency)

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphFormatError):
            Graph.from_edges(3, [(0, 5)])


class TestDistances:
    def test_bfs_path(self):
        assert bfs_distances(gen_named("path", 3), 0).tolist() == [0, 1, 2]

    def test_bfs_unreachable(self):
        assert bfs_distances(Graph.from_edges(2, []), 0).tolist() == [0, UNREACHABLE]

    def test_bfs_cycle(self):
        assert bfs_distances(gen_named("cycle", 5), 0).tolist() == [0, 1, 2, 2, 1]

    def test_bfs_source_out_of_range(self):
        with pytest.raises(ValueError):
            bfs_distances(gen_named("path", 3), 3)

    def test_apsp_k3(self):
        d = apsp(gen_named("complete", 3))
        assert all(d[u, v] == 1 for u in range(3) for v in range(3) if u != v)

    def test_apsp_disconnected(self):
        d = apsp(Graph.from_edges(2, []))
        assert d[0, 1] == UNREACHABLE and d[0, 0] == 0

    def test_apsp_p4(self):
        assert apsp(gen_named("path", 4))[0, 3] == 3

    @given(small_graphs())
    @settings(max_examples=60)
    def test_apsp_rows_equal_bfs(self, g):
        d = apsp(g)
        for u in range(g.n):
            assert d.row(u).tolist() == bfs_distances(g, u).tolist()

    @given(small_graphs())
    @settings(max_examples=60)
    def test_apsp_matches_floyd_warshall(self, g):
        assert dist_matrix_to_float(apsp(g).dist) == floyd_warshall(g)

    @given(small_graphs())
    @settings(max_examples=40)
    def test_matrix_symmetric_and_triangle(self, g):
        d = apsp(g).dist
        assert (d == d.T).all()
        f = np.where(d < 0, math.inf, d.astype(float))
        for k in range(g.n):
            assert (f <= f[:, [k]] + f[[k], :] + 1e-9).all()


class TestShortestPath:
    def test_unique_path(self):
        assert shortest_path(gen_named("path", 3), 0, 2).nodes == (0, 1, 2)

    def test_c4_tie_break_prefers_low_parent(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert shortest_path(g, 0, 2).nodes == (0, 1, 2)

    def test_no_path_error(self):
        with pytest.raises(NoPathError):
            shortest_path(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 3)

    def test_trivial_path(self):
        assert shortest_path(gen_named("path", 3), 1, 1).nodes == (1,)

    @given(small_graphs(), st.integers(0, 9), st.integers(0, 9))
    @settings(max_examples=80)
    def test_path_properties(self, g, u, v):
        if g.n == 0:
            return
        u %= g.n
        v %= g.n
        dist = bfs_distances(g, u)
        if dist[v] == UNREACHABLE:
            with pytest.raises(NoPathError):
                shortest_path(g, u, v)
            return
        p = shortest_path(g, u, v)
        assert p.nodes[0] == u and p.nodes[-1] == v
        assert p.length == dist[v]
        assert len(set(p.nodes)) == len(p.nodes)
        for a, b in p.hops():
            assert g.has_edge(a, b)
        # shortest-path adjacency limits: off-path nodes touch <= 3 path
        # nodes, on-path nodes touch <= 2 other path nodes
        on_path = set(p.nodes)
        for x in range(g.n):
            touched = sum(1 for w in p.nodes if w != x and g.has_edge(x, w))
            assert touched <= (2 if x in on_path else 3)

    @given(small_graphs(), st.integers(0, 9), st.integers(0, 9))
    @settings(max_examples=30)
    def test_deterministic(self, g, u, v):
        if g.n == 0:
            return
        u %= g.n
        v %= g.n
        if bfs_distances(g, u)[v] == UNREACHABLE:
            return
        assert shortest_path(g, u, v) == shortest_path(g, u, v)
