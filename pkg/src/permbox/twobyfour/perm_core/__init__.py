"""
perm_core — перестановки, вложение паттернов и структурные разбиения.

Публичный API:
- Permutation, PatternBasis, SourceGraphDecomposition, GridDecomposition
- contains, avoids_all
- source_graph_decomposition, source_graph_patterns, is_fan, grid_decompose
- parse_permutation, parse_basis, parse_pattern_list, format_permutation, pattern_of
"""

from permbox.twobyfour.perm_core.containment import avoids_all, contains
from permbox.twobyfour.perm_core.contracts import (
    GridDecomposition,
    PatternBasis,
    Permutation,
    SourceGraph,
    SourceGraphDecomposition,
)
from permbox.twobyfour.perm_core.decompositions import (
    grid_decompose,
    is_fan,
    left_to_right_minima,
    source_graph_decomposition,
    source_graph_patterns,
)
from permbox.twobyfour.perm_core.notation import (
    format_pattern_list,
    format_permutation,
    parse_basis,
    parse_pattern_list,
    parse_permutation,
    pattern_of,
)

__all__ = [
    "Permutation",
    "PatternBasis",
    "SourceGraph",
    "SourceGraphDecomposition",
    "GridDecomposition",
    "contains",
    "avoids_all",
    "left_to_right_minima",
    "source_graph_decomposition",
    "source_graph_patterns",
    "is_fan",
    "grid_decompose",
    "parse_permutation",
    "parse_pattern_list",
    "parse_basis",
    "format_permutation",
    "format_pattern_list",
    "pattern_of",
]
