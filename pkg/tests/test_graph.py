"""Tests for finite graphs, digraphs and the edge-list format."""

import pytest
from conftest import dags, graphs, path_graph
from hypothesis import given
from hypothesis import strategies as st

from majlab.graph import (
  CycleError,
  FiniteDigraph,
  GraphError,
  build_graph,
  format_edge_list,
  induced_prefix,
  is_acyclic,
  parse_edge_list,
  reverse_topological_order,
)


def test_build_graph_adjacency():
  graph = build_graph(4, [(2, 1), (2, 3)])
  assert graph.order == 4
  assert graph.num_edges == 2
  assert graph.neighbours(2) == (1, 3)
  assert graph.degree(4) == 0
  assert graph.has_edge(1, 2) and graph.has_edge(2, 1)
  assert graph.edge_list() == [(1, 2), (2, 3)]


def test_duplicate_edges_are_collapsed():
  graph = build_graph(2, [(1, 2), (2, 1), (1, 2)])
  assert graph.num_edges == 1
  assert graph.num_duplicates == 2


def test_digraph_keeps_both_directions():
  digraph = build_graph(2, [(1, 2), (2, 1)], directed=True)
  assert isinstance(digraph, FiniteDigraph)
  assert digraph.num_edges == 2
  assert digraph.out_neighbours(1) == (2,)
  assert digraph.degree(2) == 1


@pytest.mark.parametrize(
  "edges,pair",
  [
    ([(1, 5)], (1, 5)),
    ([(0, 1)], (0, 1)),
    ([(2, 2)], (2, 2)),
  ],
)
def test_invalid_edges_raise(edges, pair):
  with pytest.raises(GraphError) as exc_info:
    build_graph(3, edges)
  assert exc_info.value.pair == pair


def test_induced_prefix_of_path():
  prefix = induced_prefix(path_graph(5), 3)
  assert prefix.order == 3
  assert prefix.edge_list() == [(1, 2), (2, 3)]
  assert prefix.neighbours(3) == (2,)
  with pytest.raises(GraphError):
    induced_prefix(path_graph(5), 6)


@given(graphs())
def test_degree_sum_is_twice_edge_count(graph):
  assert sum(graph.degree(v) for v in graph.vertices) == 2 * graph.num_edges


@given(graphs(), st.data())
def test_prefixes_are_consistent(graph, data):
  n = data.draw(st.integers(1, graph.order))
  m = data.draw(st.integers(1, n))
  assert induced_prefix(induced_prefix(graph, n), m) == induced_prefix(graph, m)


@given(dags())
def test_reverse_topological_order_puts_heads_first(digraph):
  order = reverse_topological_order(digraph)
  assert sorted(order) == list(digraph.vertices)
  position = {v: i for i, v in enumerate(order)}
  for u, w in digraph.edge_list():
    assert position[w] < position[u]


def test_reverse_topological_order_prefers_low_indices():
  digraph = build_graph(4, [(1, 2), (2, 3)], directed=True)
  assert reverse_topological_order(digraph) == (3, 2, 1, 4)


def test_cycle_is_reported():
  digraph = build_graph(4, [(2, 3), (3, 4), (4, 2), (1, 2)], directed=True)
  assert not is_acyclic(digraph)
  with pytest.raises(CycleError) as exc_info:
    reverse_topological_order(digraph)
  assert exc_info.value.vertex == 2


def test_parse_edge_list_with_order_directive():
  graph = parse_edge_list("# order 5\n1 2\n2 3  # trailing comment\n\n")
  assert graph.order == 5
  assert graph.edge_list() == [(1, 2), (2, 3)]


def test_parse_edge_list_reports_line():
  with pytest.raises(GraphError, match="Line 2"):
    parse_edge_list("1 2\n1 2 3\n")
  with pytest.raises(GraphError, match="non-integer"):
    parse_edge_list("a b\n")


@given(graphs())
def test_edge_list_text_preserves_graph(graph):
  assert parse_edge_list(format_edge_list(graph)) == graph
