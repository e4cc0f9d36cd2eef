"""Minimum common degree of triangle-free graphs: invariants, maps to C5, blow-ups, and exhaustive checks."""

__version__ = "0.1.0"

from .graph import Graph, from_edge_list, from_graph6, to_graph6  # noqa: E402
from .invariants import min_common_degree, min_degree  # noqa: E402

__all__ = ["Graph", "from_edge_list", "from_graph6", "to_graph6", "min_common_degree", "min_degree", "__version__"]
