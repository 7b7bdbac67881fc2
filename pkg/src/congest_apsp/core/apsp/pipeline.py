"""End-to-end exact APSP: h-hop trees, blocker set, blocker SSSP, blocker broadcast, local combine."""

from __future__ import annotations

from typing import TYPE_CHECKING

from congest_apsp.core.blocker import compute_blocker
from congest_apsp.core.engine import compose_reports
from congest_apsp.core.graph import INF, saturating_add
from congest_apsp.core.primitives import full_sssp, hhop_sssp, pipelined_broadcast

from .models import ApspResult, DistanceMatrix

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping, Sequence

    from congest_apsp.core.blocker.compute import SelectionHook
    from congest_apsp.core.config import ApspConfig
    from congest_apsp.core.engine import RoundReport
    from congest_apsp.core.graph import WeightedDigraph
    from congest_apsp.core.primitives import HopTree


def round_budget(n: int, h: int, q: int) -> int:
    """Closed-form round count of a full run with |Q| = q."""
    step1 = n * (h + 1)
    blocker = n * h + n * h + 5 * n + q * ((n - 1 + h) + 5 * n)
    step3 = q * n
    step4 = q * (2 * n + n)
    return step1 + blocker + step3 + step4


def combine_distances(
    own: Sequence[int],
    blocker_dist: Mapping[int, int],
    blocker_vectors: Mapping[int, Sequence[int]],
) -> tuple[int, ...]:
    """Column δ(·, v) from δ_h(·, v), δ(c, v) and δ_h(·, c) for every blocker c."""
    column = list(own)
    for c, to_v in blocker_dist.items():
        if to_v >= INF:
            continue
        through_c = blocker_vectors[c]
        for i, to_c in enumerate(through_c):
            candidate = saturating_add(to_c, to_v)
            if candidate < column[i]:
                column[i] = candidate
    return tuple(column)


def run_apsp(
    g: WeightedDigraph,
    cfg: ApspConfig,
    on_phase: Callable[[RoundReport], None] | None = None,
    on_selection: SelectionHook | None = None,
) -> ApspResult:
    h = cfg.resolve_h(g.n)

    def emit(report: RoundReport) -> RoundReport:
        if on_phase is not None:
            on_phase(report)
        return report

    trees: dict[int, HopTree] = {}
    tree_reports = []
    for v in g.nodes:
        trees[v], report = hhop_sssp(g, v, h)
        tree_reports.append(emit(report))

    blockers, scores, blocker_report = compute_blocker(g, trees, h, on_selection=on_selection)
    emit(blocker_report)

    # Each node v holds δ(c, v) for every blocker c.
    from_blocker: dict[int, tuple[int, ...]] = {}
    sssp_reports = []
    for c in sorted(blockers.members):
        from_blocker[c], report = full_sssp(g, c)
        sssp_reports.append(emit(report))

    # Each node v receives δ_h(u, c) for all u from every blocker c.
    received: dict[int, dict[int, tuple[int, ...]]] = {}
    bcast_reports = []
    for c in sorted(blockers.members):
        held, report = pipelined_broadcast(g, c, [trees[u].dist[c] for u in g.nodes])
        received[c] = held
        bcast_reports.append(emit(report))

    columns = {
        v: combine_distances(
            own=[trees[u].dist[v] for u in g.nodes],
            blocker_dist={c: from_blocker[c][v] for c in from_blocker},
            blocker_vectors={c: received[c][v] for c in received},
        )
        for v in g.nodes
    }

    report = compose_reports(
        [
            compose_reports(tree_reports, phase="hhop_trees"),
            blocker_report,
            compose_reports(sssp_reports, phase="blocker_sssp"),
            compose_reports(bcast_reports, phase="blocker_broadcast"),
        ],
        phase="apsp",
    )
    return ApspResult(
        matrix=DistanceMatrix.from_columns(columns),
        blockers=blockers,
        report=report,
        h=h,
        trees=trees,
        scores=scores,
    )
