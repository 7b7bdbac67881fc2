"""Unit tests for score initialisation and the local score rules."""

import copy

import pytest

from congest_apsp.core.blocker import (
    NodeScores,
    ScoreState,
    descendant_update,
    init_scores,
    select_max_score,
    take_update_list,
)
from congest_apsp.core.config import default_h
from congest_apsp.core.oracle import oracle_scores
from congest_apsp.core.primitives import hhop_sssp
from tests.graphs import SMALL_CASES, g_c, g_c_trees, path_graph


class TestInitScores:
    """Leaf counting in every tree."""

    def test_g_c(self) -> None:
        """T_1 of G_C has three depth-2 leaves split 1/2 between its subtrees."""
        scores, report = init_scores(g_c(), g_c_trees(), 2)
        assert [scores.score_x(1, v) for v in range(1, 7)] == [3, 1, 2, 1, 1, 1]
        assert scores.score(3) == 2
        assert report.rounds == 2

    def test_shallow_tree(self) -> None:
        """A tree without depth-h leaves contributes nothing."""
        g = path_graph(3)
        trees = {2: hhop_sssp(g, 2, 2)[0]}
        scores, _ = init_scores(g, trees, 2)
        assert all(scores.score(v) == 0 for v in g.nodes)

    @pytest.mark.parametrize("case", SMALL_CASES, ids=lambda c: c.id)
    def test_matches_leaf_oracle(self, case) -> None:  # type: ignore[no-untyped-def]
        """Attached nodes carry exactly the oracle's subtree leaf counts."""
        g = case.graph()
        h = default_h(g.n)
        trees = {x: hhop_sssp(g, x, h)[0] for x in g.nodes}
        scores, _ = init_scores(g, trees, h)
        expected = oracle_scores(trees, h)
        for x, tree in trees.items():
            for v in g.nodes:
                if tree.attached(v):
                    assert scores.score_x(x, v) == expected[x].get(v, 0)


class TestDescendantUpdate:
    """Local zeroing below a new blocker."""

    def test_below_blocker(self, g_c_scores: ScoreState) -> None:
        """Node 4 has 1 as ancestor in T_1, so it forgets that tree."""
        descendant_update(g_c_scores.nodes[4], 1)
        assert g_c_scores.score_x(1, 4) == 0
        assert g_c_scores.score(4) == 0

    def test_unrelated_blocker(self, g_c_scores: ScoreState) -> None:
        """Node 4 is not below 3, so nothing changes."""
        before = copy.deepcopy(g_c_scores)
        descendant_update(g_c_scores.nodes[4], 3)
        assert g_c_scores == before

    def test_only_matching_tree(self) -> None:
        """Only trees whose ancestor set holds c are dropped."""
        state = NodeScores(by_root={1: 2, 5: 3}, total=5, ancestors={1: frozenset({1, 2}), 5: frozenset({5})})
        descendant_update(state, 2)
        assert state.by_root == {1: 0, 5: 3}
        assert state.total == 3


class TestTakeUpdateList:
    def test_entries_and_zeroing(self) -> None:
        """Entries skip zero scores and the node's own tree; every score ends at zero."""
        state = NodeScores(by_root={4: 1, 2: 3, 7: 0, 9: 2}, total=6)
        assert take_update_list(state, 9) == [(2, 3), (4, 1)]
        assert state.total == 0
        assert set(state.by_root.values()) == {0}


class TestSelectMaxScore:
    """Min-id argmax."""

    def test_tie(self) -> None:
        """Equal maxima resolve to the smaller id."""
        assert select_max_score({1: 3, 2: 3, 5: 1}) == 1

    def test_single(self) -> None:
        """A single positive score wins."""
        assert select_max_score({1: 0, 2: 0, 3: 0, 4: 7}) == 4

    def test_all_zero(self) -> None:
        """Nothing left to hit."""
        assert select_max_score({1: 0, 2: 0}) is None

    @pytest.mark.parametrize("seed", range(5))
    def test_brute_force(self, seed: int) -> None:
        """Agrees with a linear scan on arbitrary vectors."""
        values = {v: (v * 7919 + seed * 104729) % 5 for v in range(1, 40)}
        best = max(values.values())
        expected = min(v for v, s in values.items() if s == best) if best > 0 else None
        assert select_max_score(values) == expected
