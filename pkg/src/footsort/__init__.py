"""Deciding whether a sock ordering can be sorted by a single stack into color blocks."""

from .core import (
    Embedding,
    ParseError,
    SockOrdering,
    Verdict,
    canonicalize,
    contains_pattern,
    format_colors,
    parse_ordering,
    reduce_adjacent,
)
from .decider import decide, decide_with_report
from .oracle import (
    check_with_order,
    is_stack_sortable_permutation,
    oracle_by_orders,
    oracle_by_simulation,
)
from .classifier import (
    PatternMatch,
    generate_family,
    is_minimal_nonsortable,
    match_minimal_pattern,
    verify_classification,
)

__all__ = [
    "Embedding",
    "ParseError",
    "PatternMatch",
    "SockOrdering",
    "Verdict",
    "canonicalize",
    "check_with_order",
    "contains_pattern",
    "decide",
    "decide_with_report",
    "format_colors",
    "generate_family",
    "is_minimal_nonsortable",
    "is_stack_sortable_permutation",
    "match_minimal_pattern",
    "oracle_by_orders",
    "oracle_by_simulation",
    "parse_ordering",
    "reduce_adjacent",
    "verify_classification",
]
