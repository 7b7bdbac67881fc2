"""Full oracle battery for one graph."""

from __future__ import annotations

from typing import TYPE_CHECKING

from congest_apsp.core.apsp import run_apsp

from .checks import (
    greedy_progress_check,
    intree_check,
    matrix_check,
    oracle_blocker_check,
    score_conservation_check,
    update_list_check,
)
from .ground_truth import blocker_size_bound, oracle_apsp, oracle_hhop
from .models import CheckResult, OracleReport

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping

    from congest_apsp.core.apsp import ApspResult
    from congest_apsp.core.blocker import ScoreState, Selection
    from congest_apsp.core.config import ApspConfig
    from congest_apsp.core.engine import RoundReport
    from congest_apsp.core.graph import WeightedDigraph
    from congest_apsp.core.primitives import HopTree


def _summarise(name: str, results: list[CheckResult]) -> CheckResult:
    return next((r for r in results if not r.passed), CheckResult.ok(name, detail=f"{len(results)} checked"))


def hhop_check(g: WeightedDigraph, trees: Mapping[int, HopTree], h: int) -> CheckResult:
    for x in sorted(trees):
        expected = oracle_hhop(g, x, h)
        for v in g.nodes:
            if trees[x].dist[v] != expected[v]:
                return CheckResult.fail("hhop", [x, v], f"δ_h({x},{v}) = {trees[x].dist[v]}, expected {expected[v]}")
    return CheckResult.ok("hhop", detail=f"{len(trees)} roots")


def bandwidth_check(report: RoundReport) -> CheckResult:
    for leaf in report.leaves():
        if leaf.max_load > 1:
            return CheckResult.fail("bandwidth", [leaf.max_load], f"{leaf.phase} load {leaf.max_load}")
    return CheckResult.ok("bandwidth")


def verify_apsp(
    g: WeightedDigraph,
    cfg: ApspConfig,
    on_phase: Callable[[RoundReport], None] | None = None,
) -> tuple[ApspResult, OracleReport]:
    """Run the simulator once and check every property against sequential ground truth.

    Score conservation, greedy progress, update lists and the in-tree shape are checked after
    every blocker selection, while the run is in progress.
    """
    h = cfg.resolve_h(g.n)
    chosen: list[int] = []
    conservation: list[CheckResult] = []
    progress: list[CheckResult] = []
    intree: list[CheckResult] = []
    update_lists: list[CheckResult] = []

    def on_selection(selection: Selection, scores: ScoreState, trees: Mapping[int, HopTree]) -> None:
        update_lists.append(update_list_check(trees, selection, chosen))
        chosen.append(selection.c)
        progress.append(greedy_progress_check(selection, g.n, h))
        conservation.append(score_conservation_check(trees, h, chosen, scores))
        intree.append(intree_check(trees, selection.c, roots=[x for x, _ in selection.entries]))

    result = run_apsp(g, cfg, on_phase=on_phase, on_selection=on_selection)

    report = OracleReport()
    report.add(matrix_check("apsp", result.matrix, oracle_apsp(g)))
    report.add(hhop_check(g, result.trees, h))
    report.add(oracle_blocker_check(result.trees, result.blockers.members, h))

    size = len(result.blockers)
    bound = blocker_size_bound(g.n, h, result.blockers.initial_paths)
    if size <= bound:
        report.add(CheckResult.ok("blocker_size", detail=f"|Q|={size} <= {bound}"))
    else:
        report.add(CheckResult.fail("blocker_size", list(result.blockers.members), f"|Q|={size} > {bound}"))

    report.add(_summarise("greedy_progress", progress))
    report.add(_summarise("score_conservation", conservation))
    report.add(_summarise("intree", intree))
    report.add(_summarise("update_list", update_lists))
    report.add(bandwidth_check(result.report))
    return result, report
