"""Tree pipelines: one-to-all broadcast of k values and leader-based all-to-all."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from congest_apsp.core.engine import (
    BroadcastIncomplete,
    Message,
    NodeProgram,
    RoundReport,
    Tag,
    compose_reports,
    run_phase,
)

from .bfs import bfs_tree

if TYPE_CHECKING:
    from collections.abc import Sequence

    from congest_apsp.core.engine import Envelope, Outbox
    from congest_apsp.core.graph import NodeView, WeightedDigraph

    from .models import BfsTree

LEADER = 1


@dataclass(slots=True)
class PipeState:
    children: tuple[int, ...]
    outgoing: deque[tuple[int, int]] = field(default_factory=deque)
    received: list[tuple[int, int]] = field(default_factory=list)


class PipelineDown(NodeProgram[PipeState]):
    """The root sends its i-th value to its children in round i; every other node forwards one round later."""

    def send(self, node: NodeView, state: PipeState, rnd: int) -> Outbox:
        if not state.outgoing:
            return ()
        index, value = state.outgoing.popleft()
        message = Message(Tag.PIPE, (index, value))
        return [(child, message) for child in state.children]

    def receive(self, node: NodeView, state: PipeState, rnd: int, inbox: list[Envelope]) -> None:
        for _, message in inbox:
            index, value = message.payload
            state.received.append((index, value))
            if state.children:
                state.outgoing.append((index, value))


def pipeline_down(
    g: WeightedDigraph,
    tree: BfsTree,
    values: Sequence[int],
    phase: str,
) -> tuple[dict[int, tuple[int, ...]], RoundReport]:
    """Push ``values`` down ``tree`` in k + n rounds; every node ends with the full sequence."""
    init = {v: PipeState(children=tree.children[v]) for v in g.nodes}
    init[tree.root].outgoing.extend(enumerate(values, start=1))
    result = run_phase(g, PipelineDown(), init, budget=len(values) + g.n, phase=phase)

    expected = list(enumerate(values, start=1))
    held: dict[int, tuple[int, ...]] = {}
    for v in g.nodes:
        if v == tree.root:
            held[v] = tuple(values)
            continue
        got = result.states[v].received
        if got != expected:
            raise BroadcastIncomplete(f"{phase}: node {v} holds {len(got)} of {len(values)} values")
        held[v] = tuple(value for _, value in got)
    return held, result.report


def pipelined_broadcast(
    g: WeightedDigraph,
    root: int,
    values: Sequence[int],
) -> tuple[dict[int, tuple[int, ...]], RoundReport]:
    """Broadcast k values from ``root`` to every node: BFS build plus pipeline, 2n + k rounds."""
    tree, bfs_report = bfs_tree(g, root)
    held, pipe_report = pipeline_down(g, tree, values, phase=f"pipeline[root={root}]")
    return held, compose_reports([bfs_report, pipe_report], phase=f"broadcast[root={root}]")


@dataclass(slots=True)
class UpcastState:
    parent: int | None
    queue: deque[tuple[int, int]] = field(default_factory=deque)
    collected: dict[int, int] = field(default_factory=dict)


class Upcast(NodeProgram[UpcastState]):
    """Every non-root forwards one queued (origin, value) pair to its parent per round."""

    def send(self, node: NodeView, state: UpcastState, rnd: int) -> Outbox:
        if state.parent is None or not state.queue:
            return ()
        return [(state.parent, Message(Tag.UPCAST, state.queue.popleft()))]

    def receive(self, node: NodeView, state: UpcastState, rnd: int, inbox: list[Envelope]) -> None:
        for _, message in inbox:
            origin, value = message.payload
            if state.parent is None:
                state.collected[origin] = value
            else:
                state.queue.append((origin, value))


def all_to_all_broadcast(
    g: WeightedDigraph,
    values: dict[int, int],
) -> tuple[dict[int, tuple[int, ...]], RoundReport]:
    """Every node learns every node's value, in 5n rounds.

    A BFS tree from node 1 collects all n values at the leader with a pipelined
    convergecast (2n rounds) and pipelines them back down in id order (2n rounds).
    The returned vectors are indexed by ``node - 1``.
    """
    tree, bfs_report = bfs_tree(g, LEADER)

    init = {v: UpcastState(parent=tree.parent[v], queue=deque([(v, values[v])])) for v in g.nodes}
    leader = init[LEADER]
    leader.collected[LEADER] = values[LEADER]
    leader.queue.clear()
    result = run_phase(g, Upcast(), init, budget=2 * g.n, phase="upcast")

    collected = result.states[LEADER].collected
    if len(collected) != g.n:
        raise BroadcastIncomplete(f"upcast: leader collected {len(collected)} of {g.n} values")

    vector = [collected[v] for v in g.nodes]
    held, down_report = pipeline_down(g, tree, vector, phase="downcast")
    return held, compose_reports([bfs_report, result.report, down_report], phase="all_to_all")
