"""Exact minimum trivially perfect completion, plus the oracles used to check it.

Graphs are passed as a vertex count and a list of (u, v) pairs.
"""

from ._tpfill import (
    FillCapExceeded,
    GraphError,
    InvalidGadgetInput,
    InvalidSlimProblem,
    NotOneAwayFromTP,
    NotTriviallyPerfect,
    OracleTooLarge,
    brute_min_fill,
    build_gadget,
    is_chordal,
    is_trivially_perfect,
    min_tpc,
    slim_tpc,
    to_forest,
)

__all__ = [
    "FillCapExceeded",
    "GraphError",
    "InvalidGadgetInput",
    "InvalidSlimProblem",
    "NotOneAwayFromTP",
    "NotTriviallyPerfect",
    "OracleTooLarge",
    "brute_min_fill",
    "build_gadget",
    "is_chordal",
    "is_trivially_perfect",
    "min_tpc",
    "slim_tpc",
    "to_forest",
]
