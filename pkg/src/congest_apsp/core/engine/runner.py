"""Lockstep round executor."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import BandwidthViolation, NonNeighborSend, PayloadTooWide, ReceiveCollision
from .models import MAX_PAYLOAD, Channel, Envelope, RoundReport

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from congest_apsp.core.graph import WeightedDigraph

    from .program import NodeProgram


@dataclass(slots=True)
class PhaseResult[S]:
    states: dict[int, S]
    report: RoundReport


def _sender_key(envelope: Envelope) -> int:
    return envelope.sender


def run_phase[S](
    graph: WeightedDigraph,
    program: NodeProgram[S],
    init: Mapping[int, S],
    budget: int,
    phase: str = "phase",
    order: Sequence[int] | None = None,
    max_inbox: int | None = None,
) -> PhaseResult[S]:
    """Run ``program`` on every node for exactly ``budget`` rounds.

    ``order`` permutes the evaluation order inside each round; the outcome must
    not depend on it. ``max_inbox`` caps how many messages a node may receive in
    a single round.
    """
    if budget < 0:
        raise ValueError(f"round budget must be non-negative, got {budget}")

    states = dict(init)
    schedule = list(order) if order is not None else list(graph.nodes)
    views = {node: graph.view(node) for node in graph.nodes}
    messages = 0
    max_load = 0

    for rnd in range(1, budget + 1):
        inboxes: dict[int, list[Envelope]] = {node: [] for node in schedule}
        used: set[Channel] = set()

        for sender in schedule:
            view = views[sender]
            for dest, message in program.send(view, states[sender], rnd):
                channel = Channel(sender, dest)
                if dest not in view.neighbor_set:
                    raise NonNeighborSend(phase, rnd, channel)
                if channel in used:
                    raise BandwidthViolation(phase, rnd, channel)
                if len(message.payload) > MAX_PAYLOAD:
                    raise PayloadTooWide(
                        f"{phase}: round {rnd}: {len(message.payload)} integers on {sender}->{dest}"
                    )
                used.add(channel)
                inboxes[dest].append(Envelope(sender, message))

        if used:
            messages += len(used)
            max_load = 1

        for node in schedule:
            inbox = inboxes[node]
            if len(inbox) > 1:
                inbox.sort(key=_sender_key)
            if max_inbox is not None and len(inbox) > max_inbox:
                raise ReceiveCollision(phase, rnd, node, [e.sender for e in inbox])
            program.receive(views[node], states[node], rnd, inbox)

    report = RoundReport(phase=phase, rounds=budget, budget=budget, messages=messages, max_load=max_load)
    return PhaseResult(states=states, report=report)
