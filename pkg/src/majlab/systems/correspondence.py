"""Correspondence (DP) systems: per-edge partial matchings of bad colour pairs."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from majlab.graph import Edge, FiniteDigraph, FiniteGraph
from majlab.systems.lists import ListSystem
from majlab.systems.palette import ColourId

ColourPair = tuple[ColourId, ColourId]


def canonical_edge(u: int, w: int) -> Edge:
  return (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class CorrespondenceSystem:
  """Lists plus bad pairs B_uv.

  B_uv is stored under the key (min, max); a pair (c, c') means colour c at the
  smaller endpoint and c' at the larger one. Queries from the larger endpoint
  see the reversed pairs.
  """

  lists: ListSystem
  bad_pairs: Mapping[Edge, frozenset[ColourPair]]

  @classmethod
  def from_pairs(
    cls, lists: ListSystem, pairs: Mapping[Edge, Iterable[ColourPair]]
  ) -> CorrespondenceSystem:
    """Build from pairs keyed by any orientation; keys are canonicalized."""
    bad: dict[Edge, set[ColourPair]] = {}
    for (u, w), edge_pairs in pairs.items():
      key = canonical_edge(u, w)
      oriented = {(a, b) if u < w else (b, a) for a, b in edge_pairs}
      bad.setdefault(key, set()).update(oriented)
    return cls(lists, {key: frozenset(v) for key, v in bad.items()})

  @property
  def order(self) -> int:
    return self.lists.order

  @cached_property
  def _partners(self) -> dict[Edge, dict[ColourId, ColourId]]:
    partners: dict[Edge, dict[ColourId, ColourId]] = {}
    for (u, w), edge_pairs in self.bad_pairs.items():
      forward = partners.setdefault((u, w), {})
      backward = partners.setdefault((w, u), {})
      for a, b in sorted(edge_pairs):
        forward.setdefault(a, b)
        backward.setdefault(b, a)
    return partners

  def pairs(self, u: int, w: int) -> frozenset[ColourPair]:
    """B_uw oriented from u to w."""
    stored = self.bad_pairs.get(canonical_edge(u, w), frozenset())
    if u < w:
      return stored
    return frozenset((b, a) for a, b in stored)

  def list_of(self, v: int) -> tuple[ColourId, ...]:
    return self.lists.list_of(v)

  def contains(self, v: int, colour: ColourId) -> bool:
    return self.lists.contains(v, colour)

  def require_uniform(self, size: int | None = None) -> int:
    return self.lists.require_uniform(size)

  def restrict(self, n: int) -> CorrespondenceSystem:
    return CorrespondenceSystem(
      self.lists.restrict(n),
      {(u, w): p for (u, w), p in self.bad_pairs.items() if w <= n},
    )

  def with_lists(self, lists: ListSystem) -> CorrespondenceSystem:
    """Same bad pairs over different (e.g. restricted) lists."""
    return CorrespondenceSystem(lists, self.bad_pairs)

  def conflicts(self, u: int, cu: ColourId, w: int, cw: ColourId) -> bool:
    if u < w:
      return (cu, cw) in self.bad_pairs.get((u, w), frozenset())
    return (cw, cu) in self.bad_pairs.get((w, u), frozenset())

  def partner(self, u: int, colour: ColourId, w: int) -> ColourId | None:
    """The colour c' with (colour, c') in B_uw, if any."""
    matching = self._partners.get((u, w))
    return None if matching is None else matching.get(colour)


def list_to_correspondence(
  lists: ListSystem, graph: FiniteGraph | FiniteDigraph
) -> CorrespondenceSystem:
  """Embed list colouring: B_uv = {(c, c) : c in L(u) ∩ L(v)}."""
  if not lists.covers(graph):
    raise ValueError(f"Lists cover {lists.order} vertices, graph has {graph.order}.")
  bad: dict[Edge, frozenset[ColourPair]] = {}
  for u, w in graph.edge_list():
    key = canonical_edge(u, w)
    if key in bad:
      continue
    common = set(lists.list_of(u)) & set(lists.list_of(w))
    bad[key] = frozenset((c, c) for c in common)
  return CorrespondenceSystem(lists, bad)


##
# Validation.
##


@dataclass(frozen=True)
class Violation:
  edge: Edge
  vertex: int
  colour: ColourId
  reason: Literal["not_in_list", "matched_twice", "non_canonical_key"]

  def __str__(self) -> str:
    return f"edge {self.edge}: colour {self.colour} of vertex {self.vertex} {self.reason}"


@dataclass(frozen=True)
class CorrespondenceValidation:
  violations: tuple[Violation, ...]

  @property
  def valid(self) -> bool:
    return not self.violations


def validate_correspondence(
  system: CorrespondenceSystem, lists: ListSystem
) -> CorrespondenceValidation:
  """Check list membership and the partial-matching condition of every B_uv.

  Every violation is reported; nothing is raised.
  """
  violations: list[Violation] = []
  for (u, w) in sorted(system.bad_pairs):
    edge_pairs = sorted(system.bad_pairs[(u, w)])
    if u >= w:
      violations.append(Violation((u, w), u, 0, "non_canonical_key"))
      continue
    for a, b in edge_pairs:
      if u > lists.order or not lists.contains(u, a):
        violations.append(Violation((u, w), u, a, "not_in_list"))
      if w > lists.order or not lists.contains(w, b):
        violations.append(Violation((u, w), w, b, "not_in_list"))
    left = [a for a, _ in edge_pairs]
    right = [b for _, b in edge_pairs]
    for colour in sorted({a for a in left if left.count(a) > 1}):
      violations.append(Violation((u, w), u, colour, "matched_twice"))
    for colour in sorted({b for b in right if right.count(b) > 1}):
      violations.append(Violation((u, w), w, colour, "matched_twice"))
  return CorrespondenceValidation(tuple(violations))
