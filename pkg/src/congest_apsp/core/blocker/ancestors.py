"""Downward ancestor relay and the pipelined ancestor score update."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from congest_apsp.core.engine import (
    InTreeViolation,
    Message,
    NodeProgram,
    ReceiveCollision,
    RoundReport,
    Tag,
    compose_reports,
    run_phase,
)

if TYPE_CHECKING:
    from collections.abc import Mapping

    from congest_apsp.core.engine import Envelope, Outbox
    from congest_apsp.core.graph import NodeView, WeightedDigraph
    from congest_apsp.core.primitives import HopTree

    from .models import ScoreState


@dataclass(slots=True)
class RelayState:
    parent: int | None
    children: tuple[int, ...]
    ancestors: set[int] = field(default_factory=set)
    pending: int | None = None


class AncestorRelay(NodeProgram[RelayState]):
    """Round 1: every node sends its id to its children. Later rounds forward what arrived last round."""

    def send(self, node: NodeView, state: RelayState, rnd: int) -> Outbox:
        relay = node.id if rnd == 1 else state.pending
        state.pending = None
        if relay is None or not state.children:
            return ()
        message = Message(Tag.ANCESTOR, (relay,))
        return [(child, message) for child in state.children]

    def receive(self, node: NodeView, state: RelayState, rnd: int, inbox: list[Envelope]) -> None:
        for sender, message in inbox:
            if sender == state.parent:
                state.ancestors.add(message.payload[0])
                state.pending = message.payload[0]


def compute_ancestors(
    g: WeightedDigraph,
    trees: Mapping[int, HopTree],
    h: int,
) -> tuple[dict[int, dict[int, frozenset[int]]], RoundReport]:
    """Anc_x(v) for every root x and node v, h rounds per tree.

    Returned as ``result[x][v]``.
    """
    result: dict[int, dict[int, frozenset[int]]] = {}
    reports = []
    for x in sorted(trees):
        tree = trees[x]
        init = {v: RelayState(parent=tree.parent[v], children=tree.children[v]) for v in g.nodes}
        phase = run_phase(g, AncestorRelay(), init, budget=h, phase=f"ancestors[root={x}]")
        reports.append(phase.report)
        result[x] = {v: frozenset(state.ancestors) for v, state in phase.states.items()}
    return result, compose_reports(reports, phase="ancestors")


@dataclass(slots=True)
class UpdateState:
    frozen: bool
    outgoing: deque[tuple[int, int]] = field(default_factory=deque)


class AncestorUpdate(NodeProgram[UpdateState]):
    """Carry ⟨x, s⟩ from the selected node up its T_x path, subtracting s at every live ancestor."""

    def __init__(self, trees: Mapping[int, HopTree], scores: ScoreState) -> None:
        self.trees = trees
        self.scores = scores

    def send(self, node: NodeView, state: UpdateState, rnd: int) -> Outbox:
        if not state.outgoing:
            return ()
        x, s = state.outgoing.popleft()
        parent = self.trees[x].parent[node.id]
        if parent is None:
            return ()
        return [(parent, Message(Tag.UPDATE, (x, s)))]

    def receive(self, node: NodeView, state: UpdateState, rnd: int, inbox: list[Envelope]) -> None:
        if state.frozen:
            return
        local = self.scores.nodes[node.id]
        for _, message in inbox:
            x, s = message.payload
            local.by_root[x] = local.by_root.get(x, 0) - s
            local.total -= s
            if node.id != x:
                state.outgoing.append((x, s))


def ancestor_update(
    g: WeightedDigraph,
    trees: Mapping[int, HopTree],
    c: int,
    blockers: list[int],
    scores: ScoreState,
    entries: list[tuple[int, int]],
) -> tuple[ScoreState, RoundReport]:
    """Propagate c's update list to its ancestors in n-1+h rounds, updating ``scores`` in place.

    ``entries`` is c's list built by :func:`take_update_list`. Nodes already in
    ``blockers`` neither update nor forward. A node receiving two messages in one
    round raises :class:`InTreeViolation`.
    """
    h = next(iter(trees.values())).h if trees else 0
    frozen = {*blockers, c}
    init = {v: UpdateState(frozen=v in frozen) for v in g.nodes}
    init[c].outgoing.extend(entries)

    try:
        result = run_phase(
            g,
            AncestorUpdate(trees, scores),
            init,
            budget=g.n - 1 + h,
            phase=f"ancestor_update[c={c}]",
            max_inbox=1,
        )
    except ReceiveCollision as e:
        raise InTreeViolation(e.phase, e.round_index, e.node, e.senders) from e

    return scores, result.report
