from __future__ import annotations

from dataclasses import dataclass

from congest_apsp.core.graph import INF


@dataclass(frozen=True, slots=True)
class HopTree:
    """h-hop shortest path tree rooted at ``root``.

    Per-node tuples are indexed by node id; index 0 is padding. ``dist`` holds
    the exact h-hop distance for every node. Nodes whose parent link failed the
    final consistency round keep their distance but have ``parent=None``; they are
    detached and do not belong to the tree (see :meth:`attached`).
    """

    root: int
    h: int
    dist: tuple[int, ...]
    parent: tuple[int | None, ...]
    hops: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.dist) - 1

    def reached(self, v: int) -> bool:
        return self.dist[v] < INF

    def path_to_root(self, v: int) -> list[int] | None:
        """Nodes from ``v`` up to the root, or None when ``v`` is not attached."""
        if not self.reached(v):
            return None
        path = [v]
        while (p := self.parent[path[-1]]) is not None:
            path.append(p)
        return path if path[-1] == self.root else None

    def attached(self, v: int) -> bool:
        return self.path_to_root(v) is not None

    def depth_h_leaves(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.hops[v] == self.h and self.attached(v)]


@dataclass(frozen=True, slots=True)
class BfsTree:
    """Unweighted BFS tree over the communication topology. Index 0 is padding."""

    root: int
    parent: tuple[int | None, ...]
    depth: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.depth) - 1
