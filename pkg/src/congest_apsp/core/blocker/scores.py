"""Score initialisation and the purely local score rules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from congest_apsp.core.engine import Message, NodeProgram, RoundReport, Tag, compose_reports, run_phase

from .models import NodeScores, ScoreState

if TYPE_CHECKING:
    from collections.abc import Mapping

    from congest_apsp.core.engine import Envelope, Outbox
    from congest_apsp.core.graph import NodeView, WeightedDigraph
    from congest_apsp.core.primitives import HopTree


@dataclass(slots=True)
class LeafCountState:
    hops: int | None
    parent: int | None
    children: frozenset[int]
    score: int = 0


class LeafCount(NodeProgram[LeafCountState]):
    """Upward aggregation in one tree: nodes at depth h+1-r report in round r."""

    def __init__(self, h: int) -> None:
        self.h = h

    def send(self, node: NodeView, state: LeafCountState, rnd: int) -> Outbox:
        if state.parent is None or state.hops != self.h + 1 - rnd:
            return ()
        return [(state.parent, Message(Tag.SCORE, (state.score,)))]

    def receive(self, node: NodeView, state: LeafCountState, rnd: int, inbox: list[Envelope]) -> None:
        if state.hops != self.h - rnd:
            return
        for sender, message in inbox:
            if sender in state.children:
                state.score += message.payload[0]


def init_scores(g: WeightedDigraph, trees: Mapping[int, HopTree], h: int) -> tuple[ScoreState, RoundReport]:
    """Count depth-h leaves below every node of every tree, h rounds per tree."""
    nodes = {v: NodeScores() for v in g.nodes}
    reports = []
    for x in sorted(trees):
        tree = trees[x]
        init = {
            v: LeafCountState(
                hops=tree.hops[v],
                parent=tree.parent[v],
                children=frozenset(tree.children[v]),
                score=1 if tree.hops[v] == h else 0,
            )
            for v in g.nodes
        }
        result = run_phase(g, LeafCount(h), init, budget=h, phase=f"init_scores[root={x}]")
        reports.append(result.report)
        for v, state in result.states.items():
            if state.score:
                nodes[v].by_root[x] = state.score
                nodes[v].total += state.score
    return ScoreState(nodes), compose_reports(reports, phase="init_scores")


def descendant_update(state: NodeScores, c: int) -> NodeScores:
    """Forget every tree in which ``c`` is an ancestor of this node. No communication."""
    for x, ancestors in state.ancestors.items():
        if c in ancestors:
            state.zero(x)
    return state


def take_update_list(state: NodeScores, c: int) -> list[tuple[int, int]]:
    """Build c's ⟨x, score_x(c)⟩ list in ascending root order and zero c's own scores."""
    entries = [(x, s) for x, s in sorted(state.by_root.items()) if s and x != c]
    for x in list(state.by_root):
        state.zero(x)
    return entries


def select_max_score(scores: Mapping[int, int]) -> int | None:
    """Node with the largest positive score, lowest id first. None when every score is zero."""
    best: int | None = None
    best_score = 0
    for v in sorted(scores):
        if scores[v] > best_score:
            best, best_score = v, scores[v]
    return best
