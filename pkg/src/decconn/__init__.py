"""Decremental strong connectivity: joint SCC decompositions, failure queries and dominators."""
from .graph import Digraph, DominatorTree, parse_graph, serialize_graph, static_dominators

__all__ = ["Digraph", "DominatorTree", "parse_graph", "serialize_graph", "static_dominators"]
__version__ = "0.1.0"
