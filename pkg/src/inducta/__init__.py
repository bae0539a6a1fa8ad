"""inducta: structural graph algorithms with exhaustive desk-scale oracles."""

from .graphs import Graph, GraphError, TooLargeError, WeightedGraph, parse_graph, format_graph
from .named import named_graph, parse_named_spec

__all__ = [
    "Graph",
    "WeightedGraph",
    "GraphError",
    "TooLargeError",
    "parse_graph",
    "format_graph",
    "named_graph",
    "parse_named_spec",
]
