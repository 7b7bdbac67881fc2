"""Sequential reference computations. None of these touch the simulator."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import networkx as nx

from congest_apsp.core.apsp.models import DistanceMatrix
from congest_apsp.core.graph import INF

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from congest_apsp.core.graph import WeightedDigraph
    from congest_apsp.core.primitives import HopTree


def oracle_apsp(g: WeightedDigraph) -> DistanceMatrix:
    """Floyd-Warshall over the directed weighted edges."""
    fw = nx.floyd_warshall(g.to_nx(), weight="weight")
    return DistanceMatrix(
        tuple(
            tuple(INF if math.isinf(fw[u][v]) else int(fw[u][v]) for v in range(1, g.n + 1))
            for u in range(1, g.n + 1)
        )
    )


def oracle_hhop(g: WeightedDigraph, root: int, h: int) -> tuple[int, ...]:
    """Minimum weight over walks of at most h edges from ``root``. Indexed by node id, index 0 is padding."""
    arcs = [(u, v, w) for u, v, w in g.edges]
    if not g.directed:
        arcs += [(v, u, w) for u, v, w in g.edges]

    layer = [INF] * (g.n + 1)
    layer[root] = 0
    best = list(layer)
    for _ in range(h):
        nxt = [INF] * (g.n + 1)
        for u, v, w in arcs:
            if layer[u] < INF and layer[u] + w < nxt[v]:
                nxt[v] = layer[u] + w
        best = [min(a, b) for a, b in zip(best, nxt, strict=True)]
        layer = nxt
    best[0] = INF
    return tuple(best)


def oracle_ancestors(tree: HopTree) -> dict[int, frozenset[int]]:
    """Strict ancestors of every attached node."""
    result = {}
    for v in range(1, tree.n + 1):
        path = tree.path_to_root(v)
        if path is not None:
            result[v] = frozenset(path[1:])
    return result


def oracle_scores(
    trees: Mapping[int, HopTree],
    h: int,
    blockers: Iterable[int] = (),
) -> dict[int, dict[int, int]]:
    """``result[x][v]``: depth-h root-to-leaf paths of T_x through v that avoid every blocker."""
    blocked = set(blockers)
    result: dict[int, dict[int, int]] = {}
    for x, tree in trees.items():
        counts: dict[int, int] = {}
        for leaf in tree.depth_h_leaves():
            path = tree.path_to_root(leaf) or []
            if blocked.intersection(path):
                continue
            for v in path:
                counts[v] = counts.get(v, 0) + 1
        result[x] = counts
    return result


def count_depth_h_paths(trees: Mapping[int, HopTree]) -> int:
    return sum(len(tree.depth_h_leaves()) for tree in trees.values())


def blocker_size_bound(n: int, h: int, initial_paths: int) -> int:
    """⌈(n/h)·ln(max(p₀, 2))⌉ + 1."""
    return math.ceil((n / h) * math.log(max(initial_paths, 2))) + 1
