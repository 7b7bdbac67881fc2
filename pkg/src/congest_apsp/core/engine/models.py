from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING, NamedTuple

from pydantic import BaseModel, ConfigDict

if TYPE_CHECKING:
    from collections.abc import Iterator

MAX_PAYLOAD = 2


class Tag(StrEnum):
    """Message kinds used by the protocol suite."""

    RELAX = "relax"
    FINAL = "final"
    CHILD = "child"
    BFS = "bfs"
    JOIN = "join"
    PIPE = "pipe"
    UPCAST = "upcast"
    SCORE = "score"
    ANCESTOR = "ancestor"
    UPDATE = "update"


@dataclass(frozen=True, slots=True)
class Message:
    tag: Tag
    payload: tuple[int, ...] = ()


class Envelope(NamedTuple):
    sender: int
    message: Message


class Channel(NamedTuple):
    """Delivery direction u -> v over an undirected link."""

    u: int
    v: int


class RoundReport(BaseModel):
    """Round and message accounting for one phase or a composition of phases."""

    model_config = ConfigDict(frozen=True)

    phase: str
    rounds: int
    budget: int
    messages: int = 0
    max_load: int = 0
    parts: tuple[RoundReport, ...] = ()

    def leaves(self) -> Iterator[RoundReport]:
        """Iterate the engine phases this report was composed from, in execution order."""
        if not self.parts:
            yield self
            return
        for part in self.parts:
            yield from part.leaves()

    def part(self, phase: str) -> RoundReport:
        """Direct child report with the given phase name."""
        for p in self.parts:
            if p.phase == phase:
                return p
        raise KeyError(phase)

    def trace_record(self) -> TraceRecord:
        return TraceRecord(
            phase=self.phase,
            rounds=self.rounds,
            budget=self.budget,
            messages=self.messages,
            max_load=self.max_load,
        )


class TraceRecord(BaseModel):
    phase: str
    rounds: int
    budget: int
    messages: int
    max_load: int


def compose_reports(reports: list[RoundReport] | tuple[RoundReport, ...], phase: str = "composite") -> RoundReport:
    return RoundReport(
        phase=phase,
        rounds=sum(r.rounds for r in reports),
        budget=sum(r.budget for r in reports),
        messages=sum(r.messages for r in reports),
        max_load=max((r.max_load for r in reports), default=0),
        parts=tuple(reports),
    )
