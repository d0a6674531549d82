"""Witness families: the sets X from which the restriction draws its witnesses.

A family is materialized lazily: `stream(limit)` yields its members up to a
vertex bound in ascending vertex order. Colour-form families yield vertices,
pair-form families yield (vertex, colour) pairs with distinct vertices.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from typing import Literal

from majlab.systems import ColourId

FamilyKind = Literal["colour", "pair"]
Member = int | tuple[int, ColourId]


class FamilyError(ValueError):
  """A family stream is not ascending, repeats a vertex or leaves the vertex range."""


@dataclass(frozen=True)
class WitnessFamily:
  label: str
  kind: FamilyKind
  source: Callable[[int], Iterable[Member]]
  """Maps a vertex bound N to the members with vertex <= N, ascending."""

  @classmethod
  def from_vertices(cls, label: str, vertices: Iterable[int]) -> WitnessFamily:
    members = tuple(sorted(set(vertices)))
    if members and members[0] < 1:
      raise FamilyError(f"Family {label} contains vertex {members[0]} < 1.")
    return cls(label, "colour", lambda limit: (v for v in members if v <= limit))

  @classmethod
  def from_predicate(
    cls, label: str, predicate: Callable[[int], bool], start: int = 1
  ) -> WitnessFamily:
    """The (typically infinite) family {v >= start : predicate(v)}."""
    if start < 1:
      raise FamilyError(f"Family {label} starts at vertex {start} < 1.")
    return cls(
      label, "colour", lambda limit: (v for v in range(start, limit + 1) if predicate(v))
    )

  @classmethod
  def from_pairs(
    cls, label: str, pairs: Iterable[tuple[int, ColourId]]
  ) -> WitnessFamily:
    members = tuple(sorted(pairs))
    vertices = [v for v, _ in members]
    if len(set(vertices)) != len(vertices):
      raise FamilyError(f"Pairs of family {label} must have distinct first elements.")
    if vertices and vertices[0] < 1:
      raise FamilyError(f"Family {label} contains vertex {vertices[0]} < 1.")
    return cls(label, "pair", lambda limit: (p for p in members if p[0] <= limit))

  def stream(self, limit: int) -> Iterator[Member]:
    """Members with vertex <= limit, checked to be strictly ascending."""
    last = 0
    for member in self.source(limit):
      v = member[0] if isinstance(member, tuple) else member
      if v <= last:
        raise FamilyError(
          f"Family {self.label} is not strictly ascending: {v} after {last}."
        )
      if v > limit:
        return
      last = v
      yield member

  def materialize(self, limit: int) -> tuple[Member, ...]:
    return tuple(self.stream(limit))


def check_families(
  families: Iterable[WitnessFamily], kind: FamilyKind
) -> tuple[WitnessFamily, ...]:
  """Families as a tuple, all of `kind` and with distinct labels."""
  families = tuple(families)
  labels = [f.label for f in families]
  if len(set(labels)) != len(labels):
    raise FamilyError(f"Family labels must be distinct: {labels}")
  for family in families:
    if family.kind != kind:
      raise FamilyError(f"Family {family.label} is {family.kind}-form, expected {kind}-form.")
  return families
