from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from prettytable import PrettyTable

from majlab.restriction.families import FamilyKind
from majlab.restriction.schedule import ScheduleItem
from majlab.systems import ColourId

LedgerKey = tuple[str, ColourId | None]


class Witness(NamedTuple):
  vertex: int
  colour: ColourId
  """The colour removed from L(vertex)."""


@dataclass
class WitnessLedger:
  """Record of one restriction run.

  Keys are (family label, colour) in colour form and (family label, None) in
  pair form. Every processed schedule item ends in exactly one of: a witness,
  a shortfall (the family had no usable member left inside the prefix) or an
  absent event (literal mode consumed a vertex whose list lacks the colour).
  """

  kind: FamilyKind
  labels: tuple[str, ...]
  empty: tuple[str, ...] = ()
  """Families with no member inside the prefix. They are never scheduled."""
  schedule: list[ScheduleItem] = field(default_factory=list)
  entries: dict[LedgerKey, list[Witness]] = field(default_factory=dict)
  shortfalls: Counter[LedgerKey] = field(default_factory=Counter)
  absent: dict[LedgerKey, list[int]] = field(default_factory=dict)
  _processed: Counter[LedgerKey] = field(default_factory=Counter, repr=False)

  @staticmethod
  def key(item: ScheduleItem) -> LedgerKey:
    return (item.family, item.colour)

  def _process(self, item: ScheduleItem) -> LedgerKey:
    self.schedule.append(item)
    key = self.key(item)
    self._processed[key] += 1
    return key

  def record_witness(self, item: ScheduleItem, witness: Witness) -> None:
    self.entries.setdefault(self._process(item), []).append(witness)

  def record_shortfall(self, item: ScheduleItem) -> None:
    self.shortfalls[self._process(item)] += 1

  def record_absent(self, item: ScheduleItem, vertex: int) -> None:
    self.absent.setdefault(self._process(item), []).append(vertex)

  def has_family(self, label: str) -> bool:
    return label in self.labels

  def processed(self, label: str, colour: ColourId | None = None) -> int:
    return self._processed[(label, colour)]

  def witnesses(self, label: str, colour: ColourId | None = None) -> list[Witness]:
    return list(self.entries.get((label, colour), []))

  def witness_count(self, label: str, colour: ColourId | None = None) -> int:
    return len(self.entries.get((label, colour), []))

  def deficit(self, label: str, colour: ColourId | None = None) -> int:
    """Processed items for the key that produced no witness."""
    key = (label, colour)
    return self.shortfalls[key] + len(self.absent.get(key, []))

  @property
  def consumed(self) -> set[int]:
    vertices = {w.vertex for entries in self.entries.values() for w in entries}
    vertices.update(v for events in self.absent.values() for v in events)
    return vertices

  def keys(self) -> list[LedgerKey]:
    """Processed keys in order of first appearance in the schedule."""
    return list(self._processed)

  def to_dict(self) -> dict:
    rows = []
    for label, colour in self.keys():
      rows.append(
        {
          "family": label,
          "colour": colour,
          "processed": self.processed(label, colour),
          "witnesses": [list(w) for w in self.entries.get((label, colour), [])],
          "shortfalls": self.shortfalls[(label, colour)],
          "absent": self.absent.get((label, colour), []),
        }
      )
    return {
      "kind": self.kind,
      "families": list(self.labels),
      "empty": list(self.empty),
      "processed": len(self.schedule),
      "entries": rows,
    }

  def __str__(self) -> str:
    msg = (
      f"<WitnessLedger> {self.kind}-form, {len(self.labels)} families, "
      f"{len(self.schedule)} items processed"
      f"{f', {len(self.empty)} empty' if self.empty else ''}.\n"
    )
    table = PrettyTable()
    table.title = "Witness Ledger"
    table.field_names = ["Family", "Colour", "Processed", "Witnesses", "Deficit"]
    table.align["Family"] = "l"
    for label, colour in self.keys():
      table.add_row(
        [
          label,
          "-" if colour is None else colour,
          self.processed(label, colour),
          self.witness_count(label, colour),
          self.deficit(label, colour),
        ]
      )
    msg += table.get_string()
    return msg
