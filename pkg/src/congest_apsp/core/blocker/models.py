from __future__ import annotations

from dataclasses import dataclass, field

from pydantic import BaseModel, ConfigDict


@dataclass(slots=True)
class NodeScores:
    """Blocker bookkeeping held by one node.

    ``by_root[x]`` is score_x(v); ``total`` is kept equal to the sum of ``by_root``.
    ``ancestors[x]`` is the set of strict ancestors of v in T_x.
    """

    by_root: dict[int, int] = field(default_factory=dict)
    total: int = 0
    ancestors: dict[int, frozenset[int]] = field(default_factory=dict)

    def zero(self, x: int) -> int:
        """Drop score_x and return the amount removed."""
        amount = self.by_root.get(x, 0)
        if amount:
            self.by_root[x] = 0
            self.total -= amount
        return amount


@dataclass(slots=True)
class ScoreState:
    nodes: dict[int, NodeScores]

    def score(self, v: int) -> int:
        return self.nodes[v].total

    def score_x(self, x: int, v: int) -> int:
        return self.nodes[v].by_root.get(x, 0)

    def totals(self) -> dict[int, int]:
        return {v: s.total for v, s in self.nodes.items()}

    def surviving_paths(self) -> int:
        """Depth-h root-to-leaf paths not yet hit, read off each root's own score."""
        return sum(self.score_x(x, x) for x in self.nodes)


class AuditRecord(BaseModel):
    c: int
    score: int
    iteration: int
    list_len: int
    paths_before: int
    entries: list[tuple[int, int]]


class Selection(BaseModel):
    """One greedy pick: the chosen node, its score, and the update list it emitted."""

    model_config = ConfigDict(frozen=True)

    c: int
    score: int
    iteration: int
    entries: tuple[tuple[int, int], ...]
    paths_before: int

    def audit_record(self) -> AuditRecord:
        return AuditRecord(
            c=self.c,
            score=self.score,
            iteration=self.iteration,
            list_len=len(self.entries),
            paths_before=self.paths_before,
            entries=list(self.entries),
        )


class BlockerSet(BaseModel):
    members: list[int] = []
    selections: list[Selection] = []
    initial_paths: int = 0

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)
