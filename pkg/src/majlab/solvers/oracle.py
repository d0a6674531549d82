"""Exhaustive oracles over the space of list-respecting colourings.

Colourings are enumerated in lexicographic order of their colour-id tuples
(v_1 most significant) and evaluated in torch batches; the first optimum in
that order is returned, so the batched result equals a sequential scan.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass

import torch

from majlab.graph import FiniteDigraph, FiniteGraph
from majlab.systems import Colouring, ConstraintSystem, ListSizeError


class SearchSpaceError(RuntimeError):
  """The colouring space exceeds the configured cap."""


@dataclass
class OracleCfg:
  """Configuration for the exhaustive oracles."""

  max_colourings: int = 10**7
  """Largest number of colourings the oracles agree to enumerate."""
  batch_size: int = 1 << 16
  """Colourings evaluated per torch batch."""
  device: str = "cpu"
  """Torch device used for the batched evaluation."""

  def __post_init__(self) -> None:
    if self.max_colourings < 1:
      raise ValueError(f"max_colourings must be positive, got {self.max_colourings}")
    if self.batch_size < 1:
      raise ValueError(f"batch_size must be positive, got {self.batch_size}")


@dataclass(frozen=True)
class OracleResult:
  min_conflicts: int
  witness: Colouring


def search_space_size(system: ConstraintSystem, order: int) -> int:
  return math.prod(len(system.list_of(v)) for v in range(1, order + 1))


class ColouringSpace:
  """Mixed-radix view of all colourings of `graph` from the lists of `system`.

  A colouring is a digit row: digit v - 1 indexes into L(v).
  """

  def __init__(
    self,
    graph: FiniteGraph | FiniteDigraph,
    system: ConstraintSystem,
    cfg: OracleCfg,
  ) -> None:
    self.cfg = cfg
    self.device = cfg.device
    n = graph.order
    self.lists = [system.list_of(v) for v in graph.vertices]
    sizes = [len(options) for options in self.lists]
    if any(size == 0 for size in sizes):
      raise ListSizeError("Every vertex needs a nonempty list.")
    self.size = math.prod(sizes)
    if self.size > cfg.max_colourings:
      raise SearchSpaceError(
        f"Search space has {self.size} colourings, cap is {cfg.max_colourings}."
      )

    places = [math.prod(sizes[v + 1 :]) for v in range(n)]
    self._sizes = torch.tensor(sizes, dtype=torch.long, device=self.device)
    self._places = torch.tensor(places, dtype=torch.long, device=self.device)

    edges = graph.edge_list()
    width = max(sizes, default=1)
    self._src = torch.tensor([u - 1 for u, _ in edges], dtype=torch.long, device=self.device)
    self._dst = torch.tensor([w - 1 for _, w in edges], dtype=torch.long, device=self.device)
    # bad[e, i, j]: edge e is bad when its tail takes option i and head option j.
    bad = torch.zeros((len(edges), width, width), dtype=torch.bool)
    for e, (u, w) in enumerate(edges):
      for i, cu in enumerate(system.list_of(u)):
        for j, cw in enumerate(system.list_of(w)):
          bad[e, i, j] = system.conflicts(u, cu, w, cw)
    self._bad = bad.to(self.device)
    self._edge_ids = torch.arange(len(edges), device=self.device).unsqueeze(0)
    self.order = n
    self.num_edges = len(edges)

  def batches(self) -> Iterator[torch.Tensor]:
    """Digit rows of shape (batch, order), in lexicographic order."""
    for start in range(0, self.size, self.cfg.batch_size):
      stop = min(start + self.cfg.batch_size, self.size)
      idx = torch.arange(start, stop, dtype=torch.long, device=self.device)
      yield (idx.unsqueeze(1) // self._places.unsqueeze(0)) % self._sizes.unsqueeze(0)

  def edge_conflicts(self, digits: torch.Tensor) -> torch.Tensor:
    """Boolean (batch, num_edges) tensor of bad edges."""
    return self._bad[self._edge_ids, digits[:, self._src], digits[:, self._dst]]

  def vertex_conflicts(self, digits: torch.Tensor) -> torch.Tensor:
    """(batch, order) conflicts per tail vertex (per endpoint for graphs)."""
    bad = self.edge_conflicts(digits).long()
    counts = torch.zeros((digits.shape[0], self.order), dtype=torch.long, device=self.device)
    counts.index_add_(1, self._src, bad)
    return counts

  def colouring(self, digit_row: torch.Tensor) -> Colouring:
    return Colouring(
      tuple(self.lists[v][int(d)] for v, d in enumerate(digit_row.tolist()))
    )


def brute_force_optimum(
  graph: FiniteGraph | FiniteDigraph,
  system: ConstraintSystem,
  k: int,
  cfg: OracleCfg | None = None,
) -> OracleResult:
  """Exact minimum number of bad edges and its lexicographically first witness.

  Accepts arbitrary nonempty lists.

  Raises:
    SearchSpaceError: If the product of list sizes exceeds `cfg.max_colourings`.
  """
  del k  # Unused.
  cfg = cfg or OracleCfg()
  if system.order > graph.order:
    system = system.restrict(graph.order)
  space = ColouringSpace(graph, system, cfg)

  best: int | None = None
  witness: torch.Tensor | None = None
  for digits in space.batches():
    totals = space.edge_conflicts(digits).sum(dim=1)
    i = int(torch.argmin(totals))
    value = int(totals[i])
    if best is None or value < best:
      best, witness = value, digits[i]
    if best == 0:
      break
  assert best is not None and witness is not None
  return OracleResult(best, space.colouring(witness))


def exhaustive_digraph_search(
  digraph: FiniteDigraph,
  system: ConstraintSystem,
  k: int,
  cfg: OracleCfg | None = None,
) -> Colouring | None:
  """First colouring (lexicographic) that is (1/k)-majority on out-arcs, or None.

  Raises:
    SearchSpaceError: If the product of list sizes exceeds `cfg.max_colourings`.
  """
  if k < 2:
    raise ValueError(f"k must be >= 2, got {k}.")
  cfg = cfg or OracleCfg()
  if system.order > digraph.order:
    system = system.restrict(digraph.order)
  space = ColouringSpace(digraph, system, cfg)
  out_degree = torch.tensor(
    [digraph.out_degree(v) for v in digraph.vertices], dtype=torch.long, device=cfg.device
  )
  for digits in space.batches():
    ok = (space.vertex_conflicts(digits) * k <= out_degree.unsqueeze(0)).all(dim=1)
    hits = torch.nonzero(ok)
    if hits.numel() > 0:
      return space.colouring(digits[int(hits[0, 0])])
  return None
