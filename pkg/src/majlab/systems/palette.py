from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

ColourId = int


@dataclass(frozen=True)
class ColourPalette:
  """Bijection between colour names and colour ids.

  Names are kept sorted and numbered from 1, so the lowest colour id is the
  lexicographically smallest name.
  """

  names: tuple[str, ...]

  def __post_init__(self) -> None:
    if list(self.names) != sorted(set(self.names)):
      raise ValueError(f"Palette names must be sorted and unique, got {self.names}.")

  @classmethod
  def from_names(cls, names: Iterable[str]) -> ColourPalette:
    return cls(tuple(sorted(set(names))))

  @classmethod
  def numbered(cls, size: int) -> ColourPalette:
    """Palette c1..c<size>, zero-padded so that name order matches id order."""
    width = len(str(size))
    return cls(tuple(f"c{i:0{width}d}" for i in range(1, size + 1)))

  @cached_property
  def _ids(self) -> dict[str, int]:
    return {name: i for i, name in enumerate(self.names, start=1)}

  def __len__(self) -> int:
    return len(self.names)

  def __contains__(self, name: object) -> bool:
    return name in self._ids

  def id_of(self, name: str) -> ColourId:
    try:
      return self._ids[name]
    except KeyError:
      raise KeyError(f"Unknown colour name {name!r}.") from None

  def name_of(self, colour: ColourId) -> str:
    if not 1 <= colour <= len(self.names):
      raise KeyError(f"Unknown colour id {colour}.")
    return self.names[colour - 1]
