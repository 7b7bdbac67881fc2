"""Graph and distance types shared by every simulated protocol."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Final, NamedTuple, Self

import networkx as nx
from pydantic import BaseModel, ConfigDict, PrivateAttr, ValidationInfo, model_validator

from .errors import DisconnectedGraphError, GraphValidationError

type Distance = int

# Reserved "unreachable" value. Legal distances are bounded by n * W_max, far below it.
INF: Final[Distance] = (1 << 63) - 1


def saturating_add(a: Distance, b: Distance) -> Distance:
    """Add two distances, keeping infinity absorbing."""
    if a >= INF or b >= INF:
        return INF
    return a + b


def format_distance(d: Distance) -> str:
    return "INF" if d >= INF else str(d)


class Edge(NamedTuple):
    u: int
    v: int
    w: int


@dataclass(frozen=True, slots=True)
class NodeView:
    """What a single node knows about its surroundings.

    `out_edges` / `in_edges` map a neighbour to the weight of the directed edge.
    For undirected graphs both maps hold every incident edge. `neighbors` is the
    communication neighbourhood in the underlying undirected graph.
    """

    id: int
    out_edges: dict[int, int]
    in_edges: dict[int, int]
    neighbors: tuple[int, ...]
    neighbor_set: frozenset[int]


class WeightedDigraph(BaseModel):
    """Immutable positive-weighted graph on nodes 1..n.

    Equality only considers `n`, `edges` (in input order) and `directed`.
    Use :meth:`build` to validate against a weight bound other than n².
    """

    model_config = ConfigDict(frozen=True)

    n: int
    edges: tuple[Edge, ...]
    directed: bool

    _views: tuple[NodeView, ...] = PrivateAttr(default=())

    @classmethod
    def build(cls, n: int, edges: list[Edge] | tuple[Edge, ...], directed: bool, w_max: int | None = None) -> Self:
        """Validate and construct a graph.

        With ``w_max`` every weight must lie in [1, w_max]. Without it the only upper
        limit is that n·w stays below ``INF``, so no finite distance meets the sentinel.
        """
        return cls.model_validate(
            {"n": n, "edges": tuple(edges), "directed": directed},
            context={"w_max": w_max},
        )

    @model_validator(mode="after")
    def _check_invariants(self, info: ValidationInfo) -> Self:
        context: dict[str, Any] = info.context or {}
        explicit = context.get("w_max")
        w_max: int = explicit if explicit is not None else (INF - 1) // max(self.n, 1)

        if self.n < 1:
            raise GraphValidationError(f"node count must be positive, got {self.n}")

        seen: set[tuple[int, int]] = set()
        for u, v, w in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphValidationError(f"edge ({u}, {v}) references a node outside 1..{self.n}")
            if u == v:
                raise GraphValidationError(f"self-loop on node {u}")
            if w <= 0:
                raise GraphValidationError(f"edge ({u}, {v}) has non-positive weight {w}")
            if w > w_max:
                if explicit is not None:
                    raise GraphValidationError(f"edge ({u}, {v}) weight {w} exceeds W_max={w_max}")
                raise GraphValidationError(f"edge ({u}, {v}) weight {w} overflows distances on {self.n} nodes")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise GraphValidationError(f"duplicate edge ({u}, {v})")
            seen.add(key)

        if not nx.is_connected(self.to_undirected_nx()):
            raise DisconnectedGraphError(f"underlying undirected graph on {self.n} nodes is not connected")

        self._views = self._derive_views()
        return self

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def view(self, node: int) -> NodeView:
        return self._views[node - 1]

    def weight(self, u: int, v: int) -> int | None:
        """Weight of the directed edge u -> v, or None."""
        return self._views[u - 1].out_edges.get(v)

    def neighbors(self, node: int) -> tuple[int, ...]:
        return self._views[node - 1].neighbors

    def to_undirected_nx(self) -> nx.Graph:
        topology = nx.Graph()
        topology.add_nodes_from(range(1, self.n + 1))
        topology.add_edges_from((u, v) for u, v, _ in self.edges)
        return topology

    def to_nx(self) -> nx.DiGraph:
        """Directed weighted view; undirected edges appear in both orientations."""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(1, self.n + 1))
        for u, v, w in self.edges:
            digraph.add_edge(u, v, weight=w)
            if not self.directed:
                digraph.add_edge(v, u, weight=w)
        return digraph

    def _derive_views(self) -> tuple[NodeView, ...]:
        out_edges: list[dict[int, int]] = [{} for _ in range(self.n + 1)]
        in_edges: list[dict[int, int]] = [{} for _ in range(self.n + 1)]
        for u, v, w in self.edges:
            out_edges[u][v] = w
            in_edges[v][u] = w
            if not self.directed:
                out_edges[v][u] = w
                in_edges[u][v] = w

        views = []
        for node in range(1, self.n + 1):
            adjacent = sorted(out_edges[node].keys() | in_edges[node].keys())
            views.append(
                NodeView(
                    id=node,
                    out_edges=dict(sorted(out_edges[node].items())),
                    in_edges=dict(sorted(in_edges[node].items())),
                    neighbors=tuple(adjacent),
                    neighbor_set=frozenset(adjacent),
                )
            )
        return tuple(views)


def underlying_undirected(g: WeightedDigraph) -> dict[int, tuple[int, ...]]:
    """Symmetric communication adjacency: u ~ v iff an edge exists in either orientation."""
    return {node: g.neighbors(node) for node in g.nodes}
