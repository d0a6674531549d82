from __future__ import annotations

from majlab.graph import FiniteDigraph, reverse_topological_order
from majlab.systems import Colouring, ColourId, ConstraintSystem


def dag_greedy(digraph: FiniteDigraph, system: ConstraintSystem, k: int) -> Colouring:
  """Colour an acyclic digraph in reverse topological order.

  Each vertex takes the list colour with the fewest conflicts against its
  already coloured out-neighbours (ties: lowest colour id). Every out-neighbour
  conflicts with at most one of the k candidates, so the chosen colour has at
  most outdegree / k conflicts.

  Raises:
    CycleError: If the digraph has a directed cycle.
    ListSizeError: If the lists are not all of size k.
  """
  if k < 2:
    raise ValueError(f"k must be >= 2, got {k}.")
  if system.order > digraph.order:
    system = system.restrict(digraph.order)
  system.require_uniform(k)

  colours: list[ColourId] = [0] * digraph.order
  for v in reverse_topological_order(digraph):
    targets = digraph.out_neighbours(v)
    best, best_count = 0, -1
    for colour in system.list_of(v):
      count = sum(
        1 for w in targets if system.conflicts(v, colour, w, colours[w - 1])
      )
      if best_count < 0 or count < best_count:
        best, best_count = colour, count
    colours[v - 1] = best
  return Colouring(tuple(colours))
