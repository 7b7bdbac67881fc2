from .checks import (
    greedy_progress_check,
    intree_check,
    matrix_check,
    oracle_blocker_check,
    score_conservation_check,
    update_list_check,
)
from .ground_truth import (
    blocker_size_bound,
    count_depth_h_paths,
    oracle_ancestors,
    oracle_apsp,
    oracle_hhop,
    oracle_scores,
)
from .models import CheckResult, OracleReport
from .verify import bandwidth_check, hhop_check, verify_apsp

__all__ = [
    "CheckResult",
    "OracleReport",
    "bandwidth_check",
    "blocker_size_bound",
    "count_depth_h_paths",
    "greedy_progress_check",
    "hhop_check",
    "intree_check",
    "matrix_check",
    "oracle_ancestors",
    "oracle_apsp",
    "oracle_blocker_check",
    "oracle_hhop",
    "oracle_scores",
    "score_conservation_check",
    "update_list_check",
    "verify_apsp",
]
