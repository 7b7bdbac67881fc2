"""Unit tests for congest_apsp.core.graph.models."""

import pytest

from congest_apsp.core.graph import (
    INF,
    DisconnectedGraphError,
    Edge,
    GraphValidationError,
    WeightedDigraph,
    format_distance,
    saturating_add,
    underlying_undirected,
)
from tests.graphs import g_a, path_graph


class TestDistance:
    """Saturating distance arithmetic."""

    def test_finite_addition(self) -> None:
        """Finite distances add normally."""
        assert saturating_add(4, 6) == 10

    def test_infinity_absorbs(self) -> None:
        """Anything plus infinity stays infinity."""
        assert saturating_add(INF, 3) == INF
        assert saturating_add(3, INF) == INF
        assert saturating_add(INF, INF) == INF

    def test_format(self) -> None:
        """Infinity renders as INF."""
        assert format_distance(INF) == "INF"
        assert format_distance(12) == "12"


class TestWeightedDigraph:
    """Construction-time invariants."""

    def test_self_loop_rejected(self) -> None:
        """Self-loops are not edges."""
        with pytest.raises(GraphValidationError, match="self-loop"):
            WeightedDigraph.build(2, [Edge(1, 1, 1), Edge(1, 2, 1)], directed=True)

    def test_out_of_range_node_rejected(self) -> None:
        """Ids must lie in 1..n."""
        with pytest.raises(GraphValidationError, match="outside"):
            WeightedDigraph.build(2, [Edge(1, 3, 1)], directed=True)

    def test_duplicate_directed_edge_rejected(self) -> None:
        """The same ordered pair twice is a parallel edge."""
        with pytest.raises(GraphValidationError, match="duplicate"):
            WeightedDigraph.build(2, [Edge(1, 2, 1), Edge(1, 2, 3)], directed=True)

    def test_antiparallel_directed_edges_allowed(self) -> None:
        """u->v and v->u are distinct directed edges."""
        g = WeightedDigraph.build(2, [Edge(1, 2, 1), Edge(2, 1, 3)], directed=True)
        assert g.weight(1, 2) == 1
        assert g.weight(2, 1) == 3

    def test_antiparallel_undirected_edges_are_duplicates(self) -> None:
        """In an undirected graph {1,2} and {2,1} are the same edge."""
        with pytest.raises(GraphValidationError, match="duplicate"):
            WeightedDigraph.build(2, [Edge(1, 2, 1), Edge(2, 1, 3)], directed=False)

    def test_weight_above_n_squared_accepted(self) -> None:
        """Without an explicit W_max, weights beyond n² are fine."""
        g = WeightedDigraph.build(3, [Edge(1, 2, 1), Edge(2, 3, 1), Edge(1, 3, 10)], directed=True)
        assert g.weight(1, 3) == 10

    def test_overflowing_weight_rejected(self) -> None:
        """A weight whose n-fold sum would reach the sentinel is rejected."""
        with pytest.raises(GraphValidationError, match="overflows"):
            WeightedDigraph.build(2, [Edge(1, 2, INF // 2 + 1)], directed=False)

    def test_explicit_weight_bound(self) -> None:
        """An explicit W_max is enforced."""
        g = WeightedDigraph.build(2, [Edge(1, 2, 5)], directed=False, w_max=5)
        assert g.weight(1, 2) == 5
        with pytest.raises(GraphValidationError, match="W_max=4"):
            WeightedDigraph.build(2, [Edge(1, 2, 5)], directed=False, w_max=4)

    def test_disconnected_rejected(self) -> None:
        """The communication topology must be connected."""
        with pytest.raises(DisconnectedGraphError):
            WeightedDigraph.build(4, [Edge(1, 2, 1), Edge(3, 4, 1)], directed=True)

    def test_undirected_weight_both_ways(self) -> None:
        """Undirected edges are usable in both orientations."""
        g = path_graph(3, w=2)
        assert g.weight(2, 1) == 2
        assert g.weight(1, 2) == 2
        assert g.weight(1, 3) is None

    def test_views_sorted(self) -> None:
        """Node views list neighbours in ascending order."""
        g = g_a()
        assert list(g.view(1).out_edges) == [2, 3]
        assert list(g.view(3).in_edges) == [1, 2]
        assert g.view(3).out_edges == {}


class TestUnderlyingUndirected:
    """Communication topology."""

    def test_directed_example(self) -> None:
        """Node 3 of G_A talks to 1 and 2 although it has no out-edges."""
        assert underlying_undirected(g_a())[3] == (1, 2)

    def test_path(self) -> None:
        """The middle of a path has both ends as neighbours."""
        assert underlying_undirected(path_graph(3))[2] == (1, 3)

    def test_complete_directed(self) -> None:
        """Every node of a complete directed triangle has two neighbours."""
        edges = [Edge(u, v, 1) for u in range(1, 4) for v in range(1, 4) if u != v]
        adjacency = underlying_undirected(WeightedDigraph.build(3, edges, directed=True))
        assert all(len(adjacency[v]) == 2 for v in range(1, 4))

    def test_symmetric(self) -> None:
        """v ∈ N(u) exactly when u ∈ N(v)."""
        adjacency = underlying_undirected(g_a())
        for u, neighbors in adjacency.items():
            for v in neighbors:
                assert u in adjacency[v]
