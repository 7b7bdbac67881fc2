from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from congest_apsp.core.engine import Message, NodeProgram, RoundReport, Tag, run_phase

from .models import BfsTree

if TYPE_CHECKING:
    from congest_apsp.core.engine import Envelope, Outbox
    from congest_apsp.core.graph import NodeView, WeightedDigraph


@dataclass(slots=True)
class BfsState:
    parent: int | None = None
    depth: int | None = None
    children: list[int] = field(default_factory=list)


class BfsBuild(NodeProgram[BfsState]):
    """Flooding BFS. A node at depth d speaks once, in round d+1: JOIN to its parent, BFS to everyone else."""

    def send(self, node: NodeView, state: BfsState, rnd: int) -> Outbox:
        if state.depth is None or rnd != state.depth + 1:
            return ()
        wave = Message(Tag.BFS)
        join = Message(Tag.JOIN)
        return [(v, join if v == state.parent else wave) for v in node.neighbors]

    def receive(self, node: NodeView, state: BfsState, rnd: int, inbox: list[Envelope]) -> None:
        for sender, message in inbox:
            if message.tag is Tag.JOIN:
                state.children.append(sender)
            elif state.depth is None:
                state.parent, state.depth = sender, rnd


def bfs_tree(g: WeightedDigraph, root: int) -> tuple[BfsTree, RoundReport]:
    """BFS tree of the underlying undirected graph, built in n rounds."""
    init = {v: BfsState() for v in g.nodes}
    init[root] = BfsState(depth=0)
    result = run_phase(g, BfsBuild(), init, budget=g.n, phase=f"bfs[root={root}]")
    states = result.states
    tree = BfsTree(
        root=root,
        parent=(None, *(states[v].parent for v in g.nodes)),
        depth=(None, *(states[v].depth for v in g.nodes)),
        children=((), *(tuple(states[v].children) for v in g.nodes)),
    )
    return tree, result.report
