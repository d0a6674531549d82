"""Tests for lists, correspondence systems and the majority verifier."""

import itertools

import pytest
from conftest import complete_graph, graphs, path_graph, uniform_lists
from hypothesis import given
from hypothesis import strategies as st

from majlab.graph import build_graph
from majlab.systems import (
  Colouring,
  ColouringError,
  ColourPalette,
  CorrespondenceSystem,
  ListSizeError,
  ListSystem,
  bad_edges,
  is_bad_edge,
  list_to_correspondence,
  random_correspondence,
  random_lists,
  total_conflicts,
  validate_correspondence,
  verify_majority,
  vertex_conflicts,
)


def test_palette_numbers_sorted_names():
  palette = ColourPalette.from_names(["b", "a", "c", "a"])
  assert palette.names == ("a", "b", "c")
  assert palette.id_of("a") == 1
  assert palette.name_of(3) == "c"
  assert "d" not in palette
  with pytest.raises(KeyError):
    palette.id_of("d")


def test_numbered_palette_sorts_like_ids():
  palette = ColourPalette.numbered(12)
  assert palette.names[0] == "c01"
  assert palette.id_of("c10") == 10
  assert list(palette.names) == sorted(palette.names)


def test_list_system_queries():
  lists = ListSystem.from_mapping({1: [2, 1], 2: [3, 1]}, order=2)
  assert lists.list_of(1) == (1, 2)
  assert lists.contains(2, 3)
  assert not lists.contains(2, 2)
  assert lists.colours == (1, 2, 3)
  assert lists.require_uniform(2) == 2
  with pytest.raises(ListSizeError):
    lists.require_uniform(3)


def test_non_uniform_lists_are_rejected_where_required():
  lists = ListSystem(((1,), (1, 2)))
  assert lists.uniform_size is None
  with pytest.raises(ListSizeError):
    lists.require_uniform()


def test_is_bad_edge_in_list_mode():
  graph = path_graph(3)
  lists = ListSystem.uniform([1, 2], 3)
  colouring = Colouring((1, 1, 2))
  assert is_bad_edge(graph, (1, 2), colouring, lists)
  assert not is_bad_edge(graph, (2, 3), colouring, lists)
  with pytest.raises(ColouringError):
    is_bad_edge(graph, (1, 3), colouring, lists)


def test_conflict_accounting_helpers():
  graph = path_graph(3)
  lists = ListSystem.uniform([1, 2], 3)
  colouring = Colouring((1, 1, 2))
  assert bad_edges(graph, colouring, lists) == [(1, 2)]
  assert total_conflicts(graph, colouring, lists) == 1
  assert vertex_conflicts(graph, colouring, lists, 2) == 1
  assert vertex_conflicts(graph, colouring, lists, 2, colour=2) == 1
  assert vertex_conflicts(graph, colouring, lists, 3) == 0


def test_monochromatic_triangle_fails_everywhere():
  graph = complete_graph(3)
  lists = ListSystem.uniform([1, 2], 3)
  report = verify_majority(graph, Colouring((1, 1, 1)), lists, k=2)
  assert not report.passed
  assert [a.vertex for a in report.failures] == [1, 2, 3]
  assert report.total_conflicts == 3
  assert "Failing Vertices" in str(report)


def test_alternating_path_passes():
  report = verify_majority(
    path_graph(3), Colouring((1, 2, 1)), ListSystem.uniform([1, 2], 3), k=2
  )
  assert report.passed
  assert report.audit(2).conflicts == 0
  assert report.to_dict()["vertices"][1]["threshold"] == "1"


def test_verifier_rejects_bad_colourings():
  graph = path_graph(3)
  lists = ListSystem.uniform([1, 2], 3)
  with pytest.raises(ColouringError, match="uncoloured"):
    verify_majority(graph, Colouring((1, 2)), lists, k=2)
  with pytest.raises(ColouringError, match="not in its list"):
    verify_majority(graph, Colouring((1, 3, 1)), lists, k=2)
  with pytest.raises(ValueError):
    verify_majority(graph, Colouring((1, 2, 1)), lists, k=1)


def test_verifier_counts_out_arcs_on_digraphs():
  digraph = build_graph(3, [(1, 2), (1, 3), (2, 1)], directed=True)
  lists = ListSystem.uniform([1, 2], 3)
  report = verify_majority(digraph, Colouring((1, 1, 2)), lists, k=2)
  assert report.audit(1).degree == 2
  assert report.audit(1).conflicts == 1
  assert report.audit(1).passed
  assert not report.audit(2).passed
  assert report.audit(3).passed


def test_correspondence_orientation():
  lists = ListSystem.uniform([1, 2], 2)
  # Colour 1 at vertex 2 clashes with colour 2 at vertex 1.
  system = CorrespondenceSystem.from_pairs(lists, {(2, 1): [(1, 2)]})
  assert system.bad_pairs == {(1, 2): frozenset({(2, 1)})}
  assert system.conflicts(1, 2, 2, 1)
  assert system.conflicts(2, 1, 1, 2)
  assert not system.conflicts(1, 1, 2, 1)
  assert system.partner(2, 1, 1) == 2
  assert system.partner(1, 1, 2) is None
  assert system.pairs(2, 1) == frozenset({(1, 2)})


def test_validate_correspondence_reports_all_violations():
  lists = ListSystem.uniform([1, 2], 3)
  system = CorrespondenceSystem(
    lists, {(1, 2): frozenset({(1, 1), (1, 2)}), (2, 3): frozenset({(3, 1)})}
  )
  result = validate_correspondence(system, lists)
  assert not result.valid
  reasons = {(v.edge, v.vertex, v.colour, v.reason) for v in result.violations}
  assert ((1, 2), 1, 1, "matched_twice") in reasons
  assert ((2, 3), 2, 3, "not_in_list") in reasons


def twisted_c4() -> tuple:
  graph = build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
  lists = ListSystem.uniform([1, 2], 4)
  same = [(1, 1), (2, 2)]
  system = CorrespondenceSystem.from_pairs(
    lists, {(1, 2): same, (2, 3): same, (3, 4): same, (1, 4): [(1, 2), (2, 1)]}
  )
  return graph, system


def test_twisted_c4_always_has_a_bad_edge():
  graph, system = twisted_c4()
  assert validate_correspondence(system, system.lists).valid
  counts = [
    total_conflicts(graph, Colouring(colours), system)
    for colours in itertools.product([1, 2], repeat=4)
  ]
  assert min(counts) == 1


@given(graphs(), st.data())
def test_list_embedding_preserves_conflicts(graph, data):
  lists = data.draw(uniform_lists(graph.order, 2, 4))
  embedded = list_to_correspondence(lists, graph)
  assert validate_correspondence(embedded, lists).valid
  for u, w in graph.edge_list():
    for cu, cw in itertools.product(lists.list_of(u), lists.list_of(w)):
      assert embedded.conflicts(u, cu, w, cw) == lists.conflicts(u, cu, w, cw)


def test_random_lists_are_prefix_consistent():
  full = random_lists(20, 3, 6, seed=7)
  assert random_lists(8, 3, 6, seed=7) == full.restrict(8)
  assert full.require_uniform() == 3
  assert set(full.colours) <= set(range(1, 7))
  assert random_lists(20, 3, 6, seed=8) != full


@given(graphs(), st.integers(0, 1000))
def test_random_correspondence_is_valid(graph, seed):
  lists = random_lists(graph.order, 2, 4, seed)
  system = random_correspondence(graph, lists, seed)
  assert validate_correspondence(system, lists).valid
  assert set(system.bad_pairs) == set(graph.edge_list())
