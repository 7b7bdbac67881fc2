"""Unit tests for seeded G(n, p) generation."""

import random

import pytest

from congest_apsp.core.graph import DisconnectedGraphError, generate_gnp, serialize_graph
from congest_apsp.core.graph.generate import sample_gnp_edges


class TestGenerateGnp:
    """generate_gnp determinism and edge cases."""

    def test_complete_graph(self) -> None:
        """p=1 yields every edge; wmax=1 forces unit weights."""
        g = generate_gnp(5, 1.0, 1, seed=7)
        assert g.m == 10
        assert {w for _, _, w in g.edges} == {1}

    def test_complete_directed_graph(self) -> None:
        """p=1 on a directed graph yields all n(n-1) ordered pairs."""
        assert generate_gnp(4, 1.0, 3, seed=0, directed=True).m == 12

    def test_same_seed_same_graph(self) -> None:
        """Two calls with seed 42 are byte-identical."""
        first = serialize_graph(generate_gnp(20, 0.3, 100, seed=42))
        second = serialize_graph(generate_gnp(20, 0.3, 100, seed=42))
        assert first == second

    def test_different_seed_differs(self) -> None:
        """Different seeds usually give different graphs."""
        assert generate_gnp(20, 0.3, 100, seed=1) != generate_gnp(20, 0.3, 100, seed=2)

    def test_weights_in_range(self) -> None:
        """Weights stay within [1, wmax]."""
        g = generate_gnp(16, 0.5, 9, seed=5, directed=True)
        assert all(1 <= w <= 9 for _, _, w in g.edges)

    def test_disconnected_reports_seed(self) -> None:
        """A near-empty graph gives up after the retry budget and names the seed."""
        with pytest.raises(DisconnectedGraphError, match="seed=1") as info:
            generate_gnp(4, 0.0001, 9, seed=1)
        assert info.value.seed == 1

    def test_edge_count_matches_replayed_stream(self) -> None:
        """The kept edges are exactly those of the first connected draw of the seeded stream."""
        n, p, wmax, seed = 10, 0.35, 20, 11
        rng = random.Random(seed)
        while True:
            edges = sample_gnp_edges(rng, n, p, wmax, directed=False)
            if _connected(n, edges):
                break
        assert list(generate_gnp(n, p, wmax, seed=seed).edges) == edges

    @pytest.mark.parametrize(("n", "p"), [(1, 0.5), (5, 0.0), (5, 1.5)])
    def test_invalid_arguments(self, n: int, p: float) -> None:
        """n ≥ 2 and 0 < p ≤ 1 are preconditions."""
        with pytest.raises(ValueError):
            generate_gnp(n, p, 5, seed=0)


def _connected(n: int, edges: list) -> bool:  # type: ignore[type-arg]
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(1, n + 1)}) == 1
