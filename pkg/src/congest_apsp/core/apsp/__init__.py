from congest_apsp.core.config import ApspConfig, default_h

from .models import ApspResult, DistanceMatrix
from .pipeline import combine_distances, round_budget, run_apsp

__all__ = ["ApspConfig", "ApspResult", "DistanceMatrix", "combine_distances", "default_h", "round_budget", "run_apsp"]
