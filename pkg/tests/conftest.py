"""Shared test fixtures and utilities."""

import itertools
import os

import torch
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from majlab.graph import FiniteDigraph, FiniteGraph, build_graph
from majlab.systems import ListSystem

settings.register_profile(
  "majlab", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("majlab")


def get_test_device() -> str:
  """Get device for testing, preferring CUDA if available.

  Can be overridden with FORCE_CPU=1 environment variable to test
  CPU-only behavior on GPU machines.
  """
  if os.environ.get("FORCE_CPU") == "1":
    return "cpu"
  return "cuda" if torch.cuda.is_available() else "cpu"


def path_graph(n: int) -> FiniteGraph:
  graph = build_graph(n, [(v, v + 1) for v in range(1, n)])
  assert isinstance(graph, FiniteGraph)
  return graph


def complete_graph(n: int) -> FiniteGraph:
  graph = build_graph(n, itertools.combinations(range(1, n + 1), 2))
  assert isinstance(graph, FiniteGraph)
  return graph


@st.composite
def graphs(draw, max_order: int = 7, min_order: int = 1) -> FiniteGraph:
  order = draw(st.integers(min_order, max_order))
  pairs = list(itertools.combinations(range(1, order + 1), 2))
  mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
  graph = build_graph(order, [p for p, keep in zip(pairs, mask, strict=True) if keep])
  assert isinstance(graph, FiniteGraph)
  return graph


@st.composite
def dags(draw, max_order: int = 8) -> FiniteDigraph:
  """Acyclic digraphs with arcs from higher to lower index."""
  order = draw(st.integers(1, max_order))
  pairs = [(u, w) for u in range(1, order + 1) for w in range(1, u)]
  mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
  graph = build_graph(
    order, [p for p, keep in zip(pairs, mask, strict=True) if keep], directed=True
  )
  assert isinstance(graph, FiniteDigraph)
  return graph


@st.composite
def uniform_lists(draw, order: int, size: int, palette_size: int) -> ListSystem:
  rows = []
  for _ in range(order):
    row = draw(
      st.lists(
        st.integers(1, palette_size), min_size=size, max_size=size, unique=True
      )
    )
    rows.append(tuple(sorted(row)))
  return ListSystem(tuple(rows))
