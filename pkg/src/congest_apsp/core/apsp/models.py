from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from congest_apsp.core.graph import INF, format_distance, saturating_add

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from congest_apsp.core.blocker import BlockerSet, ScoreState
    from congest_apsp.core.engine import RoundReport
    from congest_apsp.core.primitives import HopTree


@dataclass(frozen=True, slots=True)
class DistanceMatrix:
    """n×n distances; ``matrix[u, v]`` is δ(u, v) with 1-based ids."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_columns(cls, columns: Mapping[int, Sequence[int]]) -> DistanceMatrix:
        """Assemble from per-node columns: ``columns[v][u - 1]`` is δ(u, v)."""
        n = len(columns)
        return cls(tuple(tuple(columns[v][u - 1] for v in range(1, n + 1)) for u in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return self.rows[u - 1][v - 1]

    def is_symmetric(self) -> bool:
        return all(self[u, v] == self[v, u] for u in range(1, self.n + 1) for v in range(u + 1, self.n + 1))

    def triangle_violation(self) -> tuple[int, int, int] | None:
        """First (u, c, v) with δ(u,v) > δ(u,c) + δ(c,v), if any."""
        for u in range(1, self.n + 1):
            for c in range(1, self.n + 1):
                if self[u, c] >= INF:
                    continue
                for v in range(1, self.n + 1):
                    if self[u, v] > saturating_add(self[u, c], self[c, v]):
                        return u, c, v
        return None

    def to_tsv(self) -> str:
        return "".join("\t".join(format_distance(d) for d in row) + "\n" for row in self.rows)


@dataclass(frozen=True, slots=True)
class ApspResult:
    matrix: DistanceMatrix
    blockers: BlockerSet
    report: RoundReport
    h: int
    trees: dict[int, HopTree]
    scores: ScoreState
