"""Single-vertex local search on the number of conflict edges.

The potential is the total number of bad edges. A move recolours one vertex with
the list colour that minimizes its own conflicts, and is applied only when that
strictly lowers them; every move lowers the potential by at least one, so the
search stops after at most |E| moves. At a local optimum each vertex v has
conflicts(v) * k <= degree(v): the k colours of L(v) split v's possible
conflicts (each neighbour conflicts with at most one of them, also in
correspondence mode), so the cheapest colour takes at most degree(v) / k.

Scan policy: the lowest-index vertex admitting a move is moved first, i.e. an
ascending scan restarted after every applied move.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple

from majlab.graph import FiniteDigraph, FiniteGraph
from majlab.systems import (
  Colouring,
  ColourId,
  ConstraintSystem,
  ListSizeError,
  total_conflicts,
  vertex_conflicts,
)


class SearchStep(NamedTuple):
  vertex: int
  old_colour: ColourId
  new_colour: ColourId
  conflicts: int
  """Total conflict count after the step."""


@dataclass(frozen=True)
class SearchTrace:
  steps: tuple[SearchStep, ...]
  initial_conflicts: int
  final_conflicts: int

  def __len__(self) -> int:
    return len(self.steps)

  @property
  def is_descending(self) -> bool:
    counts = [self.initial_conflicts, *(s.conflicts for s in self.steps)]
    return all(b < a for a, b in zip(counts, counts[1:], strict=False))

  def summary(self) -> dict:
    return {
      "moves": len(self.steps),
      "initial_conflicts": self.initial_conflicts,
      "final_conflicts": self.final_conflicts,
      "steps": [list(step) for step in self.steps],
    }


def initial_colouring(lists: ConstraintSystem) -> Colouring:
  """Colour every vertex with the lowest colour id of its list."""
  colours = []
  for v in range(1, lists.order + 1):
    options = lists.list_of(v)
    if not options:
      raise ListSizeError(f"Vertex {v} has an empty list.")
    colours.append(options[0])
  return Colouring(tuple(colours))


def improving_move(
  graph: FiniteGraph | FiniteDigraph,
  colouring: Colouring,
  v: int,
  system: ConstraintSystem,
  k: int,
) -> ColourId | None:
  """The best list colour for v if it strictly lowers v's conflicts, else None.

  Ties between equally good colours go to the lowest colour id.
  """
  del k  # Unused.
  best_count = vertex_conflicts(graph, colouring, system, v)
  best = None
  for colour in system.list_of(v):
    if best_count == 0:
      break
    count = vertex_conflicts(graph, colouring, system, v, colour)
    if count < best_count:
      best, best_count = colour, count
  return best


class _ConflictTable:
  """Incremental table: row[v][c] = conflicts of v if it were coloured c."""

  def __init__(
    self, graph: FiniteGraph, system: ConstraintSystem, colouring: Colouring
  ) -> None:
    self.graph = graph
    self.system = system
    self.colours = list(colouring.colours)
    self.rows: list[dict[ColourId, int]] = [
      dict.fromkeys(system.list_of(v), 0) for v in graph.vertices
    ]
    for v in graph.vertices:
      row = self.rows[v - 1]
      for w in graph.neighbours(v):
        c = system.partner(w, self.colours[w - 1], v)
        if c is not None and c in row:
          row[c] += 1

  def conflicts(self, v: int) -> int:
    return self.rows[v - 1][self.colours[v - 1]]

  def best_move(self, v: int) -> ColourId | None:
    row = self.rows[v - 1]
    best_count = row[self.colours[v - 1]]
    best = None
    for colour, count in row.items():
      if count < best_count:
        best, best_count = colour, count
    return best

  def move(self, v: int, colour: ColourId) -> int:
    """Recolour v and return the change of the total conflict count."""
    old = self.colours[v - 1]
    delta = self.rows[v - 1][colour] - self.rows[v - 1][old]
    self.colours[v - 1] = colour
    for w in self.graph.neighbours(v):
      row = self.rows[w - 1]
      c_old = self.system.partner(v, old, w)
      if c_old is not None and c_old in row:
        row[c_old] -= 1
      c_new = self.system.partner(v, colour, w)
      if c_new is not None and c_new in row:
        row[c_new] += 1
    return delta


def local_search(
  graph: FiniteGraph, system: ConstraintSystem, k: int
) -> tuple[Colouring, SearchTrace]:
  """Descend from `initial_colouring` until no vertex admits an improving move.

  The returned colouring is a (1/k)-majority colouring of `graph`.

  Raises:
    ValueError: If k < 2 or `graph` is directed.
    ListSizeError: If the lists are not all of size k.
  """
  if k < 2:
    raise ValueError(f"k must be >= 2, got {k}.")
  if graph.directed:
    raise ValueError("local_search needs an undirected graph; use dag_greedy.")
  if system.order > graph.order:
    system = system.restrict(graph.order)
  system.require_uniform(k)

  start = initial_colouring(system)
  table = _ConflictTable(graph, system, start)
  initial = total_conflicts(graph, start, system)

  total = initial
  steps: list[SearchStep] = []
  heap = list(graph.vertices)
  queued = set(heap)
  while heap:
    v = heapq.heappop(heap)
    queued.discard(v)
    colour = table.best_move(v)
    if colour is None:
      continue
    old = table.colours[v - 1]
    total += table.move(v, colour)
    steps.append(SearchStep(v, old, colour, total))
    # Only v and its neighbours can have gained a move.
    for u in (v, *graph.neighbours(v)):
      if u not in queued:
        queued.add(u)
        heapq.heappush(heap, u)

  colouring = Colouring(tuple(table.colours))
  return colouring, SearchTrace(tuple(steps), initial, total)


def stability_violations(
  graph: FiniteGraph | FiniteDigraph, colouring: Colouring, system: ConstraintSystem
) -> list[tuple[int, ColourId]]:
  """Pairs (v, c), c in L(v), under which v would have fewer conflicts."""
  found = []
  for v in graph.vertices:
    current = vertex_conflicts(graph, colouring, system, v)
    for colour in system.list_of(v):
      if vertex_conflicts(graph, colouring, system, v, colour) < current:
        found.append((v, colour))
  return found


def is_locally_stable(
  graph: FiniteGraph | FiniteDigraph, colouring: Colouring, system: ConstraintSystem
) -> bool:
  """Whether every v has at least as many conflicts under each c in L(v) as now."""
  return not stability_violations(graph, colouring, system)
