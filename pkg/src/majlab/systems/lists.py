"""Per-vertex colour lists."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from majlab.graph import FiniteDigraph, FiniteGraph
from majlab.systems.palette import ColourId


class ListSizeError(ValueError):
  """Lists have the wrong (or non-uniform) size for the requested operation."""


@dataclass(frozen=True)
class ListSystem:
  """Colour list L(v) for each vertex v = 1..order, stored ascending."""

  lists: tuple[tuple[ColourId, ...], ...]

  def __post_init__(self) -> None:
    for v, colours in enumerate(self.lists, start=1):
      if list(colours) != sorted(set(colours)):
        raise ValueError(f"List of vertex {v} must be ascending and distinct: {colours}")

  @classmethod
  def from_mapping(cls, lists: Mapping[int, Iterable[ColourId]], order: int) -> ListSystem:
    missing = [v for v in range(1, order + 1) if v not in lists]
    if missing:
      raise ValueError(f"Vertices without a list: {missing[:10]}")
    return cls(tuple(tuple(sorted(set(lists[v]))) for v in range(1, order + 1)))

  @classmethod
  def uniform(cls, colours: Iterable[ColourId], order: int) -> ListSystem:
    row = tuple(sorted(set(colours)))
    return cls((row,) * order)

  @property
  def order(self) -> int:
    return len(self.lists)

  @cached_property
  def _sets(self) -> tuple[frozenset[ColourId], ...]:
    return tuple(frozenset(colours) for colours in self.lists)

  @cached_property
  def colours(self) -> tuple[ColourId, ...]:
    """The colour universe C, ascending."""
    return tuple(sorted(set().union(*self._sets)))

  @property
  def uniform_size(self) -> int | None:
    sizes = {len(colours) for colours in self.lists}
    return sizes.pop() if len(sizes) == 1 else None

  def require_uniform(self, size: int | None = None) -> int:
    """Return the common list size, checking it equals `size` when given."""
    uniform = self.uniform_size
    if uniform is None:
      raise ListSizeError("Lists must all have the same size.")
    if size is not None and uniform != size:
      raise ListSizeError(f"Expected lists of size {size}, got {uniform}.")
    return uniform

  def list_of(self, v: int) -> tuple[ColourId, ...]:
    return self.lists[v - 1]

  def contains(self, v: int, colour: ColourId) -> bool:
    return colour in self._sets[v - 1]

  def covers(self, graph: FiniteGraph | FiniteDigraph) -> bool:
    return self.order >= graph.order

  def restrict(self, n: int) -> ListSystem:
    return ListSystem(self.lists[:n])

  # Conflict interface shared with CorrespondenceSystem.

  def conflicts(self, u: int, cu: ColourId, w: int, cw: ColourId) -> bool:
    del u, w  # Unused.
    return cu == cw

  def partner(self, u: int, colour: ColourId, w: int) -> ColourId | None:
    """Colour of w that conflicts with u coloured `colour`, if it is in L(w)."""
    del u  # Unused.
    return colour if colour in self._sets[w - 1] else None
