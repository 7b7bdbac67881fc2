"""Unit tests for the lockstep round executor."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import pytest

from congest_apsp.core.engine import (
    BandwidthViolation,
    Message,
    NodeProgram,
    NonNeighborSend,
    PayloadTooWide,
    ReceiveCollision,
    Tag,
    run_phase,
)
from tests.graphs import SMALL_CASES, g_a, path_graph

if TYPE_CHECKING:
    from congest_apsp.core.engine import Envelope, Outbox
    from congest_apsp.core.graph import NodeView


@dataclass
class FloodState:
    heard: list[int] = field(default_factory=list)


class IdFlood(NodeProgram[FloodState]):
    """Send my id to every neighbour in round 1."""

    def send(self, node: NodeView, state: FloodState, rnd: int) -> Outbox:
        if rnd == 1:
            return [(v, Message(Tag.RELAX, (node.id,))) for v in node.neighbors]
        return []

    def receive(self, node: NodeView, state: FloodState, rnd: int, inbox: list[Envelope]) -> None:
        state.heard.extend(e.message.payload[0] for e in inbox)


@dataclass
class MinState:
    value: int
    changed: bool = True


class MinFlood(NodeProgram[MinState]):
    """Every node learns the global minimum id."""

    def send(self, node: NodeView, state: MinState, rnd: int) -> Outbox:
        if not state.changed:
            return []
        state.changed = False
        return [(v, Message(Tag.RELAX, (state.value,))) for v in node.neighbors]

    def receive(self, node: NodeView, state: MinState, rnd: int, inbox: list[Envelope]) -> None:
        for e in inbox:
            if e.message.payload[0] < state.value:
                state.value = e.message.payload[0]
                state.changed = True


class Doubler(NodeProgram[FloodState]):
    def send(self, node: NodeView, state: FloodState, rnd: int) -> Outbox:
        if node.id == 1:
            first = node.neighbors[0]
            return [(first, Message(Tag.RELAX, (1,))), (first, Message(Tag.RELAX, (2,)))]
        return []

    def receive(self, node: NodeView, state: FloodState, rnd: int, inbox: list[Envelope]) -> None:
        pass


class Stranger(NodeProgram[FloodState]):
    def send(self, node: NodeView, state: FloodState, rnd: int) -> Outbox:
        return [(3, Message(Tag.RELAX))] if node.id == 1 else []

    def receive(self, node: NodeView, state: FloodState, rnd: int, inbox: list[Envelope]) -> None:
        pass


class WidePayload(NodeProgram[FloodState]):
    def send(self, node: NodeView, state: FloodState, rnd: int) -> Outbox:
        return [(node.neighbors[0], Message(Tag.RELAX, (1, 2, 3)))] if node.id == 1 else []

    def receive(self, node: NodeView, state: FloodState, rnd: int, inbox: list[Envelope]) -> None:
        pass


def _fresh(n: int) -> dict[int, FloodState]:
    return {v: FloodState() for v in range(1, n + 1)}


class TestRunPhase:
    """run_phase contract checks."""

    def test_id_flood(self) -> None:
        """One flood round delivers neighbour ids sorted by sender."""
        result = run_phase(g_a(), IdFlood(), _fresh(3), budget=1, phase="flood")
        assert result.states[1].heard == [2, 3]
        assert result.states[2].heard == [1, 3]
        assert result.states[3].heard == [1, 2]
        assert result.report.rounds == 1
        assert result.report.max_load == 1
        assert result.report.messages == 6

    def test_two_messages_on_one_channel(self) -> None:
        """A second message on the same channel names that channel."""
        with pytest.raises(BandwidthViolation) as info:
            run_phase(g_a(), Doubler(), _fresh(3), budget=1, phase="dbl")
        assert info.value.channel == (1, 2)
        assert info.value.round_index == 1
        assert "1->2" in str(info.value)

    def test_zero_budget(self) -> None:
        """budget=0 sends nothing and leaves states untouched."""
        result = run_phase(g_a(), IdFlood(), _fresh(3), budget=0)
        assert all(state.heard == [] for state in result.states.values())
        assert result.report.rounds == 0
        assert result.report.messages == 0
        assert result.report.max_load == 0

    def test_negative_budget(self) -> None:
        """Negative budgets are rejected."""
        with pytest.raises(ValueError):
            run_phase(g_a(), IdFlood(), _fresh(3), budget=-1)

    def test_non_neighbor_send(self) -> None:
        """Sending along a non-existent link aborts."""
        with pytest.raises(NonNeighborSend):
            run_phase(path_graph(3), Stranger(), _fresh(3), budget=1)

    def test_payload_too_wide(self) -> None:
        """Messages carry at most two integers."""
        with pytest.raises(PayloadTooWide):
            run_phase(g_a(), WidePayload(), _fresh(3), budget=1)

    def test_receive_cap(self) -> None:
        """max_inbox turns a multi-message round into a collision."""
        with pytest.raises(ReceiveCollision) as info:
            run_phase(g_a(), IdFlood(), _fresh(3), budget=1, max_inbox=1)
        assert info.value.node == 1
        assert info.value.senders == [2, 3]

    def test_budget_counts_idle_rounds(self) -> None:
        """The report charges the full budget even when nodes go quiet early."""
        result = run_phase(g_a(), IdFlood(), _fresh(3), budget=5)
        assert result.report.rounds == 5
        assert result.report.budget == 5
        assert result.report.messages == 6

    @pytest.mark.parametrize("case", SMALL_CASES[:6], ids=lambda c: c.id)
    def test_schedule_independence(self, case) -> None:  # type: ignore[no-untyped-def]
        """Reversing the evaluation order inside rounds changes nothing."""
        g = case.graph()
        init = {v: MinState(v) for v in g.nodes}
        forward = run_phase(g, MinFlood(), {v: MinState(v) for v in g.nodes}, budget=g.n)
        backward = run_phase(g, MinFlood(), init, budget=g.n, order=list(reversed(g.nodes)))
        assert {v: s.value for v, s in forward.states.items()} == {v: 1 for v in g.nodes}
        assert forward.states == backward.states
        assert forward.report == backward.report
