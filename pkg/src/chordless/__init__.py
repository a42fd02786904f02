"""Enumeration of chordless (induced) s-t paths and cycles."""

from .cycles import (
    canonical_cycle,
    chordless_cycles,
    enumerate_chordless_cycles,
    enumerate_chordless_cycles_through,
    vertex_in_chordless_cycle,
)
from .graph import Checkpoint, Graph, GraphError, MarkSet, from_edge_list, mark_reachable, shortest_path
from .paths import (
    EnumStats,
    branch_candidates,
    chordless_st_paths,
    enumerate_chordless_st_paths,
    enumerate_chordless_st_paths_simple,
    recompute_marks,
    update_marks_first_child,
)

__all__ = [
    "Checkpoint",
    "EnumStats",
    "Graph",
    "GraphError",
    "MarkSet",
    "branch_candidates",
    "canonical_cycle",
    "chordless_cycles",
    "chordless_st_paths",
    "enumerate_chordless_cycles",
    "enumerate_chordless_cycles_through",
    "enumerate_chordless_st_paths",
    "enumerate_chordless_st_paths_simple",
    "from_edge_list",
    "mark_reachable",
    "recompute_marks",
    "shortest_path",
    "update_marks_first_child",
    "vertex_in_chordless_cycle",
]
