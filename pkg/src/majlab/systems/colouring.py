from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from majlab.systems.palette import ColourId


class ColouringError(ValueError):
  """A colouring is incomplete, leaves its lists, or is queried off the graph."""


@dataclass(frozen=True)
class Colouring:
  """Assignment χ(v) for v = 1..order, stored at index v - 1."""

  colours: tuple[ColourId, ...]

  @classmethod
  def from_mapping(cls, assignment: Mapping[int, ColourId], order: int) -> Colouring:
    missing = [v for v in range(1, order + 1) if v not in assignment]
    if missing:
      raise ColouringError(f"Uncoloured vertices: {missing[:10]}")
    return cls(tuple(assignment[v] for v in range(1, order + 1)))

  @property
  def order(self) -> int:
    return len(self.colours)

  def __len__(self) -> int:
    return len(self.colours)

  def __getitem__(self, v: int) -> ColourId:
    if not 1 <= v <= len(self.colours):
      raise ColouringError(f"Vertex {v} is not coloured.")
    return self.colours[v - 1]

  def restrict(self, n: int) -> Colouring:
    if n > len(self.colours):
      raise ColouringError(f"Cannot restrict a colouring of order {self.order} to {n}.")
    return Colouring(self.colours[:n])

  def with_colour(self, v: int, colour: ColourId) -> Colouring:
    colours = list(self.colours)
    colours[v - 1] = colour
    return Colouring(tuple(colours))

  def as_dict(self) -> dict[int, ColourId]:
    return {v: c for v, c in enumerate(self.colours, start=1)}
