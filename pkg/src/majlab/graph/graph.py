"""Finite graphs and digraphs over dense 1-based vertex ids.

Vertices are the integers 1..order and the vertex ordering v_1, v_2, ... used by
the compactness machinery is the integer order. Both structures are immutable
after construction.

Digraphs expose `neighbours` and `degree` as their *out*-neighbourhood and
*out*-degree: every majority notion on a digraph is taken over out-arcs, so
solvers and verifiers can treat both kinds uniformly.
"""

from __future__ import annotations

import bisect
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import ClassVar

import networkx as nx

from majlab.utils.logging import print_warning

Vertex = int
Edge = tuple[int, int]


class GraphError(ValueError):
  """Invalid graph input. `pair` is the offending vertex pair, if any."""

  def __init__(self, message: str, pair: Edge | None = None) -> None:
    super().__init__(message)
    self.pair = pair


class CycleError(GraphError):
  """A digraph expected to be acyclic has a directed cycle through `vertex`."""

  def __init__(self, vertex: int) -> None:
    super().__init__(f"Digraph is not acyclic: vertex {vertex} lies on a cycle.")
    self.vertex = vertex


def _check_vertex(order: int, v: int) -> None:
  if not 1 <= v <= order:
    raise GraphError(f"Vertex {v} out of range [1, {order}].")


@dataclass(frozen=True)
class FiniteGraph:
  """Simple undirected graph. Edges are stored as (min, max) pairs."""

  order: int
  edges: frozenset[Edge]
  adjacency: tuple[tuple[int, ...], ...]
  """Ascending neighbour tuple of vertex v at index v - 1."""
  num_duplicates: int = field(default=0, compare=False)
  """Number of duplicate input edges collapsed during construction."""

  directed: ClassVar[bool] = False

  @property
  def vertices(self) -> range:
    return range(1, self.order + 1)

  @property
  def num_edges(self) -> int:
    return len(self.edges)

  def neighbours(self, v: int) -> tuple[int, ...]:
    _check_vertex(self.order, v)
    return self.adjacency[v - 1]

  def degree(self, v: int) -> int:
    return len(self.neighbours(v))

  def has_edge(self, u: int, v: int) -> bool:
    return (min(u, v), max(u, v)) in self.edges

  def edge_list(self) -> list[Edge]:
    return sorted(self.edges)

  def to_networkx(self) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(self.vertices)
    g.add_edges_from(self.edge_list())
    return g


@dataclass(frozen=True)
class FiniteDigraph:
  """Simple digraph. Arcs are ordered (tail, head) pairs; 2-cycles are allowed."""

  order: int
  arcs: frozenset[Edge]
  out_adjacency: tuple[tuple[int, ...], ...]
  """Ascending out-neighbour tuple of vertex v at index v - 1."""
  num_duplicates: int = field(default=0, compare=False)

  directed: ClassVar[bool] = True

  @property
  def vertices(self) -> range:
    return range(1, self.order + 1)

  @property
  def num_edges(self) -> int:
    return len(self.arcs)

  def out_neighbours(self, v: int) -> tuple[int, ...]:
    _check_vertex(self.order, v)
    return self.out_adjacency[v - 1]

  def out_degree(self, v: int) -> int:
    return len(self.out_neighbours(v))

  # Majority conditions on digraphs are taken over out-arcs.
  neighbours = out_neighbours
  degree = out_degree

  def has_edge(self, u: int, w: int) -> bool:
    return (u, w) in self.arcs

  def edge_list(self) -> list[Edge]:
    return sorted(self.arcs)

  def to_networkx(self) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(self.vertices)
    g.add_edges_from(self.edge_list())
    return g


Graph = FiniteGraph | FiniteDigraph


def _adjacency(order: int, pairs: Iterable[Edge], symmetric: bool):
  adj: list[list[int]] = [[] for _ in range(order)]
  for u, w in pairs:
    adj[u - 1].append(w)
    if symmetric:
      adj[w - 1].append(u)
  return tuple(tuple(sorted(a)) for a in adj)


def build_graph(
  order: int, edge_list: Iterable[Edge], directed: bool = False
) -> FiniteGraph | FiniteDigraph:
  """Validate an edge list and build a graph or digraph on vertices 1..order.

  Duplicate edges (for graphs, also reversed duplicates) are collapsed and
  counted in `num_duplicates` with a warning.

  Raises:
    GraphError: On an endpoint outside [1, order] or a self-loop.
  """
  if order < 0:
    raise GraphError(f"Order must be non-negative, got {order}.")
  seen: set[Edge] = set()
  duplicates = 0
  for pair in edge_list:
    u, w = int(pair[0]), int(pair[1])
    if not (1 <= u <= order and 1 <= w <= order):
      raise GraphError(f"Endpoint of {(u, w)} out of range [1, {order}].", (u, w))
    if u == w:
      raise GraphError(f"Self-loop {(u, w)} is not allowed.", (u, w))
    key = (u, w) if directed else (min(u, w), max(u, w))
    if key in seen:
      duplicates += 1
      continue
    seen.add(key)

  if duplicates:
    print_warning(f"Collapsed {duplicates} duplicate edge(s).")
  edges = frozenset(seen)
  if directed:
    return FiniteDigraph(
      order, edges, _adjacency(order, edges, symmetric=False), duplicates
    )
  return FiniteGraph(order, edges, _adjacency(order, edges, symmetric=True), duplicates)


def induced_prefix(graph: FiniteGraph | FiniteDigraph, n: int):
  """The substructure induced by v_1..v_n (same kind as `graph`)."""
  if not 1 <= n <= graph.order:
    raise GraphError(f"Prefix length {n} out of range [1, {graph.order}].")
  if n == graph.order:
    return graph
  adjacency = tuple(
    nbrs[: bisect.bisect_right(nbrs, n)]
    for nbrs in (graph.neighbours(v) for v in range(1, n + 1))
  )
  if isinstance(graph, FiniteDigraph):
    arcs = frozenset((u, w) for u, w in graph.arcs if u <= n and w <= n)
    return FiniteDigraph(n, arcs, adjacency)
  edges = frozenset((u, w) for u, w in graph.edges if w <= n)
  return FiniteGraph(n, edges, adjacency)


def reverse_topological_order(digraph: FiniteDigraph) -> tuple[int, ...]:
  """Order in which every vertex comes after all of its out-neighbours.

  Kahn-style elimination of sinks; among available vertices the lowest index
  goes first.

  Raises:
    CycleError: If the digraph has a directed cycle.
  """
  reverse = nx.DiGraph()
  reverse.add_nodes_from(digraph.vertices)
  reverse.add_edges_from((w, u) for u, w in digraph.arcs)
  try:
    return tuple(nx.lexicographical_topological_sort(reverse))
  except nx.NetworkXUnfeasible:
    cycle = nx.find_cycle(digraph.to_networkx())
    raise CycleError(min(u for u, _ in cycle)) from None


def is_acyclic(digraph: FiniteDigraph) -> bool:
  return nx.is_directed_acyclic_graph(digraph.to_networkx())
