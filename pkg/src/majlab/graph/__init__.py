from majlab.graph.edgelist import format_edge_list, parse_edge_list
from majlab.graph.graph import (
  CycleError,
  Edge,
  FiniteDigraph,
  FiniteGraph,
  Graph,
  GraphError,
  Vertex,
  build_graph,
  induced_prefix,
  is_acyclic,
  reverse_topological_order,
)

__all__ = (
  "Vertex",
  "Edge",
  "Graph",
  "FiniteGraph",
  "FiniteDigraph",
  "GraphError",
  "CycleError",
  "build_graph",
  "induced_prefix",
  "reverse_topological_order",
  "is_acyclic",
  # Text format.
  "parse_edge_list",
  "format_edge_list",
)
