"""Structural checks returning a witness on failure."""

from __future__ import annotations

from typing import TYPE_CHECKING

from congest_apsp.core.graph import format_distance

from .ground_truth import oracle_scores
from .models import CheckResult

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from congest_apsp.core.apsp import DistanceMatrix
    from congest_apsp.core.blocker import ScoreState, Selection
    from congest_apsp.core.primitives import HopTree


def matrix_check(name: str, got: DistanceMatrix, expected: DistanceMatrix) -> CheckResult:
    for u in range(1, expected.n + 1):
        for v in range(1, expected.n + 1):
            if got[u, v] != expected[u, v]:
                return CheckResult.fail(
                    name,
                    [u, v],
                    f"δ({u},{v}) = {format_distance(got[u, v])}, expected {format_distance(expected[u, v])}",
                )
    return CheckResult.ok(name)


def oracle_blocker_check(trees: Mapping[int, HopTree], blockers: Iterable[int], h: int) -> CheckResult:
    """Every root-to-leaf path of exactly h hops must contain a blocker."""
    chosen = set(blockers)
    for x in sorted(trees):
        tree = trees[x]
        for leaf in tree.depth_h_leaves():
            path = list(reversed(tree.path_to_root(leaf) or []))
            if len(path) == h + 1 and not chosen.intersection(path):
                return CheckResult.fail("blocker_coverage", path, f"uncovered path in T_{x}")
    return CheckResult.ok("blocker_coverage")


def intree_check(trees: Mapping[int, HopTree], c: int, roots: Iterable[int] | None = None) -> CheckResult:
    """The union of tree paths x -> c (over ``roots``, default every root reaching c) must be an in-tree at c.

    Each node on the union may have only one successor toward c.
    """
    selected = sorted(trees) if roots is None else sorted(roots)
    toward_c: dict[int, tuple[int, int]] = {}
    for x in selected:
        if x == c:
            continue
        path = trees[x].path_to_root(c)
        if path is None:
            continue
        # path runs c -> ... -> x; the successor of path[i] toward c is path[i - 1].
        for i in range(1, len(path)):
            node, successor = path[i], path[i - 1]
            seen = toward_c.setdefault(node, (successor, x))
            if seen[0] != successor:
                return CheckResult.fail(
                    "intree",
                    [node, seen[0], successor],
                    f"node {node} leads toward {c} via {seen[0]} in T_{seen[1]} and via {successor} in T_{x}",
                )
    return CheckResult.ok("intree")


def greedy_progress_check(selection: Selection, n: int, h: int) -> CheckResult:
    """A pick must hit at least p·(h+1)/n of the p surviving paths."""
    if selection.score * n >= selection.paths_before * (h + 1):
        return CheckResult.ok("greedy_progress")
    return CheckResult.fail(
        "greedy_progress",
        [selection.c],
        f"score {selection.score} < {selection.paths_before}·{h + 1}/{n} at iteration {selection.iteration}",
    )


def score_conservation_check(
    trees: Mapping[int, HopTree],
    h: int,
    blockers: Iterable[int],
    scores: ScoreState,
) -> CheckResult:
    """Every score_x(v) equals the surviving depth-h paths of T_x through v, and totals add up."""
    expected = oracle_scores(trees, h, blockers)
    for v, local in scores.nodes.items():
        for x in sorted(trees):
            want = expected[x].get(v, 0)
            got = local.by_root.get(x, 0)
            if got != want:
                return CheckResult.fail("score_conservation", [x, v], f"score_{x}({v}) = {got}, expected {want}")
        if local.total != sum(local.by_root.values()):
            return CheckResult.fail("score_conservation", [v], f"score({v}) = {local.total} is not the sum over roots")
    return CheckResult.ok("score_conservation")


def update_list_check(trees: Mapping[int, HopTree], selection: Selection, earlier: Iterable[int]) -> CheckResult:
    """No tree path x -> c named in c's update list may pass through an earlier blocker."""
    blocked = set(earlier)
    for x, _ in selection.entries:
        path = trees[x].path_to_root(selection.c) or []
        hit = blocked.intersection(path)
        if hit:
            return CheckResult.fail(
                "update_list",
                [selection.c, x, min(hit)],
                f"entry for T_{x} of blocker {selection.c} runs through earlier blocker {min(hit)}",
            )
    return CheckResult.ok("update_list")
