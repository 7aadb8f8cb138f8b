"""Exact perfect-matching enumeration on embedded graphs via Pfaffians and determinants."""
from .embedded import EmbeddedGraph, validate
from .kasteleyn import count_matchings, weighted_matching_sum
from .laurent import Laurent, Q, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "EmbeddedGraph",
    "Laurent",
    "Q",
    "count_matchings",
    "format_poly",
    "parse_poly",
    "validate",
    "weighted_matching_sum",
]
