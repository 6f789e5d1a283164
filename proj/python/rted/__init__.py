"""Exact tree edit distance between ordered labeled trees.

Thin wrapper around the C++ core: parsing/serialization of bracket trees,
synthetic shape generators, the optimal LRH strategy, and the strategy
executor with subproblem instrumentation.
"""

from rted._core import (
    OracleLimitError,
    Tree,
    TreeParseError,
    brute_force_distance,
    fixed_strategy_cost,
    gen_shape,
    ingest_xml,
    optimal_strategy_cost,
    parse_bracket,
    serialize_bracket,
    tree_edit_distance,
)

__all__ = [
    "OracleLimitError",
    "Tree",
    "TreeParseError",
    "brute_force_distance",
    "fixed_strategy_cost",
    "gen_shape",
    "ingest_xml",
    "optimal_strategy_cost",
    "parse_bracket",
    "serialize_bracket",
    "tree_edit_distance",
]
