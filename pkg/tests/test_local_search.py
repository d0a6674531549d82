"""Tests for the local search solver."""

import networkx as nx
import pytest
from conftest import complete_graph, graphs, path_graph, uniform_lists
from hypothesis import given
from hypothesis import strategies as st

from majlab.graph import build_graph
from majlab.systems import (
  Colouring,
  CorrespondenceSystem,
  ListSizeError,
  ListSystem,
  list_to_correspondence,
  random_correspondence,
  random_lists,
  verify_majority,
)
from majlab.solvers import (
  SearchStep,
  improving_move,
  initial_colouring,
  is_locally_stable,
  local_search,
)


def atlas_graphs(max_order: int = 6):
  """Connected graphs on 1..max_order vertices, up to isomorphism."""
  for g in nx.graph_atlas_g():
    if 1 <= g.number_of_nodes() <= max_order and nx.is_connected(g):
      yield build_graph(g.number_of_nodes(), [(u + 1, w + 1) for u, w in g.edges()])


def test_triangle_trace():
  colouring, trace = local_search(complete_graph(3), ListSystem.uniform([1, 2], 3), k=2)
  assert colouring == Colouring((2, 1, 1))
  assert trace.initial_conflicts == 3
  assert trace.final_conflicts == 1
  assert trace.steps == (SearchStep(1, 1, 2, 1),)


def test_k4_splits_two_and_two():
  lists = ListSystem.uniform([1, 2], 4)
  colouring, trace = local_search(complete_graph(4), lists, k=2)
  assert trace.final_conflicts == 2
  assert sorted(colouring.colours) == [1, 1, 2, 2]
  assert verify_majority(complete_graph(4), colouring, lists, k=2).passed


def test_twisted_c4_keeps_one_bad_edge():
  cycle = build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
  lists = ListSystem.uniform([1, 2], 4)
  same = {(1, 1), (2, 2)}
  twisted = CorrespondenceSystem.from_pairs(
    lists, {(1, 2): same, (2, 3): same, (3, 4): same, (1, 4): {(1, 2), (2, 1)}}
  )
  colouring, trace = local_search(cycle, twisted, k=2)
  assert trace.final_conflicts == 1
  report = verify_majority(cycle, colouring, twisted, k=2)
  assert report.passed
  assert report.total_conflicts == 1
  assert all(a.conflicts <= 1 for a in report.audits)


def test_initial_colouring_takes_lowest_colour():
  lists = ListSystem(((2, 3), (1, 4)))
  assert initial_colouring(lists) == Colouring((2, 1))


def test_improving_move_prefers_lowest_colour():
  star = build_graph(3, [(1, 2), (1, 3)])
  lists = ListSystem(((1, 2, 3), (1, 2, 3), (1, 2, 3)))
  assert improving_move(star, Colouring((1, 1, 1)), 1, lists, k=3) == 2
  assert improving_move(star, Colouring((2, 1, 1)), 1, lists, k=3) is None


def test_improving_move_on_monochromatic_triangle():
  triangle = complete_graph(3)
  lists = ListSystem.uniform([1, 2], 3)
  assert improving_move(triangle, Colouring((1, 1, 1)), 1, lists, k=2) == 2
  assert improving_move(triangle, Colouring((2, 1, 1)), 1, lists, k=2) is None


def test_wrong_list_size_is_rejected():
  with pytest.raises(ListSizeError):
    local_search(path_graph(3), ListSystem.uniform([1, 2, 3], 3), k=2)
  with pytest.raises(ValueError):
    local_search(path_graph(3), ListSystem.uniform([1, 2], 3), k=1)


def test_digraphs_are_rejected():
  digraph = build_graph(2, [(1, 2)], directed=True)
  with pytest.raises(ValueError, match="undirected"):
    local_search(digraph, ListSystem.uniform([1, 2], 2), k=2)  # type: ignore[arg-type]


@given(graphs(), st.integers(2, 4), st.data())
def test_output_is_majority_and_locally_stable(graph, k, data):
  lists = data.draw(uniform_lists(graph.order, k, 2 * k))
  colouring, trace = local_search(graph, lists, k)
  assert verify_majority(graph, colouring, lists, k).passed
  assert is_locally_stable(graph, colouring, lists)
  assert trace.is_descending
  assert len(trace) <= graph.num_edges


@given(graphs(), st.data())
def test_correspondence_solver_matches_list_solver(graph, data):
  lists = data.draw(uniform_lists(graph.order, 2, 4))
  embedded = list_to_correspondence(lists, graph)
  assert local_search(graph, embedded, 2) == local_search(graph, lists, 2)


@given(graphs(), st.permutations([1, 2, 3, 4]), st.data())
def test_renaming_colours_keeps_majority(graph, renaming, data):
  lists = data.draw(uniform_lists(graph.order, 2, 4))
  renamed = ListSystem(
    tuple(tuple(sorted(renaming[c - 1] for c in row)) for row in lists.lists)
  )
  colouring, _ = local_search(graph, renamed, 2)
  assert verify_majority(graph, colouring, renamed, 2).passed


@pytest.mark.slow
def test_connected_graphs_up_to_six_vertices():
  graphs_ = list(atlas_graphs())
  assert len(graphs_) == 143
  for index, graph in enumerate(graphs_):
    for seed in range(200):
      lists = random_lists(graph.order, 2, 4, seed=1000 * index + seed)
      colouring, trace = local_search(graph, lists, 2)
      assert verify_majority(graph, colouring, lists, 2).passed
      assert trace.is_descending
      assert len(trace) <= graph.num_edges

      embedded = list_to_correspondence(lists, graph)
      assert local_search(graph, embedded, 2) == (colouring, trace)


@pytest.mark.slow
def test_random_correspondence_systems():
  for seed in range(200):
    order = 1 + seed % 6
    g = nx.gnp_random_graph(order, 0.6, seed=seed)
    graph = build_graph(order, [(u + 1, w + 1) for u, w in g.edges()])
    lists = random_lists(order, 2, 4, seed)
    system = random_correspondence(graph, lists, seed)
    colouring, _ = local_search(graph, system, 2)
    assert verify_majority(graph, colouring, system, 2).passed
