from .ancestors import ancestor_update, compute_ancestors
from .compute import compute_blocker
from .models import AuditRecord, BlockerSet, NodeScores, ScoreState, Selection
from .scores import descendant_update, init_scores, select_max_score, take_update_list

__all__ = [
    "AuditRecord",
    "BlockerSet",
    "NodeScores",
    "ScoreState",
    "Selection",
    "ancestor_update",
    "compute_ancestors",
    "compute_blocker",
    "descendant_update",
    "init_scores",
    "select_max_score",
    "take_update_list",
]
