"""Deterministic enumeration of the countable set of restriction requests.

Requests are triples (X, c, i) in colour form and pairs (X, i) in pair form.
Ranks are 1-based positions of the family in the given sequence and of the
colour in ascending order.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from typing import Literal, NamedTuple

from majlab.restriction.families import WitnessFamily
from majlab.systems import ColourId

Diagonal = Literal["family", "full"]


class ScheduleItem(NamedTuple):
  family: str
  colour: ColourId | None
  """None for pair-form items."""
  index: int


def iter_schedule(
  families: Sequence[WitnessFamily],
  colours: Sequence[ColourId] | None,
  diagonal: Diagonal = "family",
) -> Iterator[ScheduleItem]:
  """Unbounded schedule.

  Items are grouped by a diagonal d and emitted group by group, each group in
  lexicographic (i, family rank, colour rank) order. With diagonal="family",
  d = max(family rank, i) and every colour is swept inside each (X, i); with
  diagonal="full", d = max(family rank, colour rank, i).
  """
  labels = [f.label for f in families]
  palette: list[ColourId | None] = [None] if colours is None else sorted(colours)
  if not labels or not palette:
    return
  full = diagonal == "full" and colours is not None
  for d in itertools.count(1):
    for i in range(1, d + 1):
      for r, label in enumerate(labels[:d], start=1):
        for s, colour in enumerate(palette, start=1):
          rank = max(r, s, i) if full else max(r, i)
          if full and s > d:
            break
          if rank == d:
            yield ScheduleItem(label, colour, i)


def enumerate_schedule(
  families: Sequence[WitnessFamily],
  colours: Sequence[ColourId] | None,
  budget: int,
  diagonal: Diagonal = "family",
) -> tuple[ScheduleItem, ...]:
  """The first `budget` items of the schedule; pass colours=None for pair form."""
  if budget < 0:
    raise ValueError(f"budget must be >= 0, got {budget}.")
  return tuple(itertools.islice(iter_schedule(families, colours, diagonal), budget))
