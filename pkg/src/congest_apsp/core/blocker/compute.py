"""Deterministic distributed greedy blocker set."""

from __future__ import annotations

from typing import TYPE_CHECKING

from congest_apsp.core.engine import BroadcastIncomplete, RoundReport, compose_reports
from congest_apsp.core.primitives import all_to_all_broadcast

from .ancestors import ancestor_update, compute_ancestors
from .models import BlockerSet, Selection
from .scores import descendant_update, init_scores, select_max_score, take_update_list

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping

    from congest_apsp.core.graph import WeightedDigraph
    from congest_apsp.core.primitives import HopTree

    from .models import ScoreState

type SelectionHook = Callable[[Selection, ScoreState, Mapping[int, HopTree]], None]


def _agreed_scores(g: WeightedDigraph, vectors: Mapping[int, tuple[int, ...]]) -> dict[int, int]:
    """The score vector every node holds after an all-to-all round; they must all agree."""
    reference = vectors[1]
    for v in g.nodes:
        if vectors[v] != reference:
            raise BroadcastIncomplete(f"node {v} disagrees with node 1 on the score vector")
    return dict(zip(g.nodes, reference, strict=True))


def _detach_fragments(scores: ScoreState, ancestors: Mapping[int, Mapping[int, frozenset[int]]]) -> None:
    """Attach ancestor sets and drop scores of nodes whose chain does not reach the root."""
    for v, local in scores.nodes.items():
        for x, per_node in ancestors.items():
            anc = per_node[v]
            if anc:
                local.ancestors[x] = anc
            if v != x and x not in anc:
                local.zero(x)


def compute_blocker(
    g: WeightedDigraph,
    trees: Mapping[int, HopTree],
    h: int,
    on_selection: SelectionHook | None = None,
) -> tuple[BlockerSet, ScoreState, RoundReport]:
    """Greedily pick blockers until no depth-h root-to-leaf path is left unhit.

    Every node evaluates the loop guard and the selection on the score vector it
    received; no extra coordination is needed.
    """
    scores, init_report = init_scores(g, trees, h)
    ancestors, anc_report = compute_ancestors(g, trees, h)
    _detach_fragments(scores, ancestors)

    vectors, bcast_report = all_to_all_broadcast(g, scores.totals())
    reports: list[RoundReport] = [init_report, anc_report, bcast_report]

    blockers = BlockerSet(initial_paths=scores.surviving_paths())
    iteration = 0
    while (c := select_max_score(_agreed_scores(g, vectors))) is not None:
        iteration += 1
        paths_before = scores.surviving_paths()
        score = scores.score(c)

        entries = take_update_list(scores.nodes[c], c)
        for v in g.nodes:
            descendant_update(scores.nodes[v], c)
        scores, update_report = ancestor_update(g, trees, c, blockers.members, scores, entries)

        selection = Selection(
            c=c,
            score=score,
            iteration=iteration,
            entries=tuple(entries),
            paths_before=paths_before,
        )
        blockers.members.append(c)
        blockers.selections.append(selection)
        if on_selection is not None:
            on_selection(selection, scores, trees)

        vectors, bcast_report = all_to_all_broadcast(g, scores.totals())
        reports.append(compose_reports([update_report, bcast_report], phase=f"blocker_iteration[c={c}]"))

    return blockers, scores, compose_reports(reports, phase="compute_blocker")
