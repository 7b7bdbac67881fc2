from __future__ import annotations

import pytest

from congest_apsp.core.blocker import ScoreState, compute_ancestors, init_scores
from congest_apsp.core.blocker.compute import _detach_fragments
from tests.graphs import g_c, g_c_trees


@pytest.fixture
def g_c_scores() -> ScoreState:
    """Initial scores of G_C with ancestor sets attached, as compute_blocker sees them before its loop."""
    g, trees = g_c(), g_c_trees()
    scores, _ = init_scores(g, trees, 2)
    ancestors, _ = compute_ancestors(g, trees, 2)
    _detach_fragments(scores, ancestors)
    return scores
