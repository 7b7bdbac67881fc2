"""Distributed Bellman-Ford: h-hop trees and full single-source distances."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from congest_apsp.core.engine import Message, NodeProgram, RoundReport, Tag, run_phase
from congest_apsp.core.graph import INF

from .models import HopTree

if TYPE_CHECKING:
    from congest_apsp.core.engine import Envelope, Outbox
    from congest_apsp.core.graph import NodeView, WeightedDigraph


@dataclass(slots=True)
class HopState:
    dist: int = INF
    hops: int | None = None
    parent: int | None = None
    children: list[int] = field(default_factory=list)


class HopBoundedBellmanFord(NodeProgram[HopState]):
    """``h`` relaxation rounds followed by one child-notification round.

    Offers are ranked by (distance, hops) and then by sender id. In the last
    round every reached node reports its final (dist, hops) on its out-edges and
    to its parent; a parent link is kept only when both ends agree on it.
    """

    def __init__(self, h: int) -> None:
        self.h = h

    def send(self, node: NodeView, state: HopState, rnd: int) -> Outbox:
        if state.dist == INF:
            return ()
        offer = (state.dist, state.hops or 0)
        if rnd <= self.h:
            message = Message(Tag.RELAX, offer)
            return [(v, message) for v in node.out_edges]

        final = Message(Tag.FINAL, offer)
        outbox = [(v, final) for v in node.out_edges if v != state.parent]
        if state.parent is not None:
            outbox.append((state.parent, Message(Tag.CHILD, offer)))
        return outbox

    def receive(self, node: NodeView, state: HopState, rnd: int, inbox: list[Envelope]) -> None:
        if rnd <= self.h:
            for sender, message in inbox:
                d, k = message.payload
                candidate = d + node.in_edges[sender]
                if state.dist == INF or (candidate, k + 1) < (state.dist, state.hops):
                    state.dist, state.hops, state.parent = candidate, k + 1, sender
                elif (candidate, k + 1) == (state.dist, state.hops) and state.parent is not None and sender < state.parent:
                    state.parent = sender
            return

        parent_confirmed = False
        for sender, message in inbox:
            d, k = message.payload
            if sender == state.parent and message.tag is Tag.FINAL:
                parent_confirmed = d + node.in_edges[sender] == state.dist and k + 1 == state.hops
            elif message.tag is Tag.CHILD:
                w = node.out_edges.get(sender)
                if w is not None and d == state.dist + w and k == (state.hops or 0) + 1:
                    state.children.append(sender)
        if state.parent is not None and not parent_confirmed:
            state.parent = None


def hhop_sssp(g: WeightedDigraph, root: int, h: int) -> tuple[HopTree, RoundReport]:
    """Build the h-hop SSSP tree of ``root`` in h+1 rounds."""
    if not 1 <= h <= g.n - 1:
        raise ValueError(f"hop bound must lie in [1, {g.n - 1}], got {h}")

    init = {v: HopState() for v in g.nodes}
    init[root] = HopState(dist=0, hops=0)
    result = run_phase(g, HopBoundedBellmanFord(h), init, budget=h + 1, phase=f"hhop_sssp[root={root}]")

    states = result.states
    tree = HopTree(
        root=root,
        h=h,
        dist=(INF, *(states[v].dist for v in g.nodes)),
        parent=(None, *(states[v].parent for v in g.nodes)),
        hops=(None, *(states[v].hops for v in g.nodes)),
        children=((), *(tuple(states[v].children) for v in g.nodes)),
    )
    return tree, result.report


@dataclass(slots=True)
class DistState:
    dist: int = INF


class FullBellmanFord(NodeProgram[DistState]):
    def send(self, node: NodeView, state: DistState, rnd: int) -> Outbox:
        if state.dist == INF:
            return ()
        message = Message(Tag.RELAX, (state.dist,))
        return [(v, message) for v in node.out_edges]

    def receive(self, node: NodeView, state: DistState, rnd: int, inbox: list[Envelope]) -> None:
        for sender, message in inbox:
            candidate = message.payload[0] + node.in_edges[sender]
            if candidate < state.dist:
                state.dist = candidate


def full_sssp(g: WeightedDigraph, root: int) -> tuple[tuple[int, ...], RoundReport]:
    """Exact distances from ``root`` after n rounds. Returns a tuple indexed by node id."""
    init = {v: DistState() for v in g.nodes}
    init[root] = DistState(dist=0)
    result = run_phase(g, FullBellmanFord(), init, budget=g.n, phase=f"full_sssp[root={root}]")
    return (INF, *(result.states[v].dist for v in g.nodes)), result.report
