from .bfs import bfs_tree
from .broadcast import all_to_all_broadcast, pipeline_down, pipelined_broadcast
from .models import BfsTree, HopTree
from .sssp import full_sssp, hhop_sssp

__all__ = [
    "BfsTree",
    "HopTree",
    "all_to_all_broadcast",
    "bfs_tree",
    "full_sssp",
    "hhop_sssp",
    "pipeline_down",
    "pipelined_broadcast",
]
