"""Seeded generators for lists and correspondence systems.

Every object is keyed by vertex or edge through `make_rng`, so the lists of
v_1..v_n do not depend on how many further vertices are generated.
"""

from __future__ import annotations

from majlab.graph import Edge, FiniteDigraph, FiniteGraph
from majlab.systems.correspondence import (
  ColourPair,
  CorrespondenceSystem,
  canonical_edge,
)
from majlab.systems.lists import ListSystem
from majlab.utils.random import make_rng

# Stream tags, so lists and matchings drawn with the same seed are independent.
_LISTS = 0
_MATCHINGS = 1


def random_lists(order: int, size: int, palette_size: int, seed: int) -> ListSystem:
  """Lists of `size` distinct colours drawn from ids 1..palette_size."""
  if not 1 <= size <= palette_size:
    raise ValueError(f"Need 1 <= size <= palette_size, got {size} and {palette_size}.")
  rows = []
  for v in range(1, order + 1):
    rng = make_rng(seed, _LISTS, v)
    picked = rng.choice(palette_size, size=size, replace=False) + 1
    rows.append(tuple(sorted(int(c) for c in picked)))
  return ListSystem(tuple(rows))


def random_matching(
  lists: ListSystem, edge: Edge, seed: int
) -> frozenset[ColourPair]:
  """A random partial matching between L(u) and L(w) for u < w."""
  u, w = edge
  rng = make_rng(seed, _MATCHINGS, u, w)
  left = [int(c) for c in rng.permutation(lists.list_of(u))]
  right = [int(c) for c in rng.permutation(lists.list_of(w))]
  size = int(rng.integers(0, min(len(left), len(right)) + 1))
  return frozenset(zip(left[:size], right[:size], strict=True))


def random_correspondence(
  graph: FiniteGraph | FiniteDigraph, lists: ListSystem, seed: int
) -> CorrespondenceSystem:
  """Valid correspondence system with a seeded random matching on every edge."""
  bad: dict[Edge, frozenset[ColourPair]] = {}
  for u, w in graph.edge_list():
    key = canonical_edge(u, w)
    if key not in bad:
      bad[key] = random_matching(lists, key, seed)
  return CorrespondenceSystem(lists, bad)
