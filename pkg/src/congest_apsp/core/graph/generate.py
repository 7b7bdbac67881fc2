"""Seeded G(n, p) generation."""

from __future__ import annotations

import random

from .errors import DisconnectedGraphError
from .models import Edge, WeightedDigraph

DEFAULT_MAX_RETRIES = 100


def sample_gnp_edges(rng: random.Random, n: int, p: float, wmax: int, directed: bool) -> list[Edge]:
    """Draw one G(n, p) edge set from ``rng``.

    Candidate pairs are visited in lexicographic order (ordered pairs u != v when
    directed, u < v otherwise). Each pair consumes one ``random()`` draw and, if
    kept, one ``randint(1, wmax)`` draw for its weight.
    """
    edges = []
    for u in range(1, n + 1):
        for v in range(1 if directed else u + 1, n + 1):
            if u == v:
                continue
            if rng.random() < p:
                edges.append(Edge(u, v, rng.randint(1, wmax)))
    return edges


def generate_gnp(
    n: int,
    p: float,
    wmax: int,
    seed: int,
    directed: bool = False,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> WeightedDigraph:
    """Generate a connected G(n, p) graph with weights uniform in [1, wmax].

    All attempts draw from a single ``random.Random(seed)`` stream, so the result
    is a pure function of the arguments.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    if wmax < 1:
        raise ValueError(f"wmax must be positive, got {wmax}")

    rng = random.Random(seed)
    for _ in range(max_retries):
        edges = sample_gnp_edges(rng, n, p, wmax, directed)
        try:
            return WeightedDigraph.build(n, edges, directed, w_max=max(wmax, n * n))
        except DisconnectedGraphError:
            continue

    raise DisconnectedGraphError(
        f"G({n}, {p}) stayed disconnected after {max_retries} attempts (seed={seed})",
        seed=seed,
    )
