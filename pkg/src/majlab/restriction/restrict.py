"""Sublist restriction: shrink (l+1)-lists to l-lists so that every witness
family keeps, for every colour, members whose sublist misses that colour.

Each scheduled request takes the least unused member of its family. The
chosen vertex loses the requested colour; every vertex never chosen drops its
highest colour id.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from typing import TYPE_CHECKING

from majlab.restriction.families import (
  FamilyError,
  Member,
  WitnessFamily,
  check_families,
)
from majlab.restriction.ledger import Witness, WitnessLedger
from majlab.restriction.schedule import Diagonal, ScheduleItem, enumerate_schedule
from majlab.systems import (
  ColourId,
  CorrespondenceSystem,
  ListSizeError,
  ListSystem,
)

if TYPE_CHECKING:
  from majlab.tower.presentation import CountablePresentation


@dataclass
class RestrictionCfg:
  """Configuration for the restriction procedure."""

  skip_absent: bool = True
  """Only pick a vertex whose list contains the requested colour. When False,
  the least unused member is consumed regardless and a missing colour is
  recorded as an absent event."""
  diagonal: Diagonal = "family"
  """Schedule diagonal, see `iter_schedule`."""


@dataclass(frozen=True)
class SublistAssignment:
  sublists: ListSystem
  removed: tuple[ColourId, ...]
  """Colour dropped from L(v), at index v - 1."""

  @property
  def order(self) -> int:
    return self.sublists.order

  @property
  def size(self) -> int:
    return self.sublists.require_uniform()

  def sublist(self, v: int) -> tuple[ColourId, ...]:
    return self.sublists.list_of(v)


def _prefix_lists(lists: ListSystem, prefix: int) -> ListSystem:
  if prefix < 1:
    raise ValueError(f"Vertex prefix must be >= 1, got {prefix}.")
  if lists.order < prefix:
    raise ListSizeError(f"Lists cover {lists.order} vertices, prefix is {prefix}.")
  lists = lists.restrict(prefix)
  if lists.require_uniform() < 2:
    raise ListSizeError("Restriction needs lists of size l + 1 >= 2.")
  return lists


def _split_empty(
  families: tuple[WitnessFamily, ...], prefix: int
) -> tuple[tuple[WitnessFamily, ...], tuple[str, ...]]:
  """Families with a member inside the prefix, and the labels of the rest."""
  live = tuple(f for f in families if next(f.stream(prefix), None) is not None)
  kept = {f.label for f in live}
  return live, tuple(f.label for f in families if f.label not in kept)


def _assemble(lists: ListSystem, chosen: dict[int, ColourId]) -> SublistAssignment:
  rows: list[tuple[ColourId, ...]] = []
  removed: list[ColourId] = []
  for v in range(1, lists.order + 1):
    colours = lists.list_of(v)
    drop = chosen.get(v, colours[-1])
    rows.append(tuple(c for c in colours if c != drop))
    removed.append(drop)
  return SublistAssignment(ListSystem(tuple(rows)), tuple(removed))


def _next_member(
  cursor: Iterator[Member], consumed: set[int], accept: Callable[[Member], bool]
) -> Member | None:
  for member in cursor:
    v = member[0] if isinstance(member, tuple) else member
    if v not in consumed and accept(member):
      return member
  return None


def _run(
  lists: ListSystem,
  families: tuple[WitnessFamily, ...],
  schedule: Iterable[ScheduleItem],
  ledger: WitnessLedger,
  skip_absent: bool,
) -> SublistAssignment:
  prefix = lists.order
  by_label = {f.label: f for f in families}
  cursors: dict[tuple[str, ColourId | None], Iterator[Member]] = {}
  consumed: set[int] = set()
  chosen: dict[int, ColourId] = {}

  def has_colour(member: Member, colour: ColourId | None) -> bool:
    if isinstance(member, tuple):
      return lists.contains(*member)
    assert colour is not None
    return lists.contains(member, colour)

  for item in schedule:
    key = WitnessLedger.key(item)
    if key not in cursors:
      cursors[key] = by_label[item.family].stream(prefix)
    member = _next_member(
      cursors[key],
      consumed,
      (lambda m: has_colour(m, item.colour)) if skip_absent else (lambda m: True),
    )
    if member is None:
      ledger.record_shortfall(item)
      continue
    if isinstance(member, tuple):
      v, colour = member
    else:
      v, colour = member, item.colour
    assert colour is not None
    consumed.add(v)
    if lists.contains(v, colour):
      chosen[v] = colour
      ledger.record_witness(item, Witness(v, colour))
    else:
      ledger.record_absent(item, v)
  return _assemble(lists, chosen)


def restrict_lists(
  prefix: int,
  lists: ListSystem,
  families: Iterable[WitnessFamily],
  budget: int,
  cfg: RestrictionCfg | None = None,
) -> tuple[SublistAssignment, WitnessLedger]:
  """Colour-form restriction over v_1..v_prefix.

  Each schedule item (X, c, i) takes the least unused v in X (v <= prefix) with
  c in L(v) and sets L'(v) = L(v) minus c. An exhausted family is recorded as a
  shortfall. Families with no member inside the prefix are listed in
  `ledger.empty` and get no schedule items.

  Raises:
    ListSizeError: If the lists are not uniform of size >= 2 or do not cover
      the prefix.
    FamilyError: On an invalid family stream.
  """
  cfg = cfg or RestrictionCfg()
  lists = _prefix_lists(lists, prefix)
  families = check_families(families, "colour")
  live, empty = _split_empty(families, prefix)
  schedule = enumerate_schedule(live, lists.colours, budget, cfg.diagonal)
  ledger = WitnessLedger("colour", tuple(f.label for f in families), empty)
  return _run(lists, live, schedule, ledger, cfg.skip_absent), ledger


def restrict_pairs(
  prefix: int,
  lists: ListSystem,
  families: Iterable[WitnessFamily],
  budget: int,
  cfg: RestrictionCfg | None = None,
) -> tuple[SublistAssignment, WitnessLedger]:
  """Pair-form restriction: each item (X, i) takes the least pair (v, c) of X
  whose vertex has not been chosen yet and sets L'(v) = L(v) minus c.
  """
  cfg = cfg or RestrictionCfg()
  lists = _prefix_lists(lists, prefix)
  families = check_families(families, "pair")
  live, empty = _split_empty(families, prefix)
  schedule = enumerate_schedule(live, None, budget, cfg.diagonal)
  ledger = WitnessLedger("pair", tuple(f.label for f in families), empty)
  return _run(lists, live, schedule, ledger, cfg.skip_absent), ledger


##
# Families from a countable presentation.
##


def neighbourhood_label(u: int) -> str:
  return f"N({u})"


def pair_family_label(u: int, colour: ColourId) -> str:
  return f"X({u},{colour})"


def _centres(presentation: CountablePresentation, prefix: int, centres: int | None):
  bound = prefix if centres is None else min(prefix, centres)
  return presentation.infinite_degree_vertices(bound)


def build_neighbourhood_families(
  presentation: CountablePresentation, prefix: int, centres: int | None = None
) -> tuple[WitnessFamily, ...]:
  """N(u) over v_1..v_prefix for every declared infinite-degree u.

  `centres` bounds the vertices u that get a family.
  """
  graph = presentation.materialize(prefix)
  return tuple(
    WitnessFamily.from_vertices(neighbourhood_label(u), graph.neighbours(u))
    for u in _centres(presentation, prefix, centres)
  )


def build_correspondence_families(
  presentation: CountablePresentation,
  prefix: int,
  lists: ListSystem,
  correspondence: CorrespondenceSystem,
  centres: int | None = None,
) -> tuple[WitnessFamily, ...]:
  """X(u, c) = {(v, c') : v in N(u), (c, c') in B_uv} over v_1..v_prefix.

  One family per declared infinite-degree u and c in L(u); vertices of finite
  degree contribute none. Families are emitted even when empty so that
  certification can report them; the restriction does not schedule them.
  """
  graph = presentation.materialize(prefix)
  families = []
  for u in _centres(presentation, prefix, centres):
    for colour in lists.list_of(u):
      pairs = []
      for v in graph.neighbours(u):
        partner = correspondence.partner(u, colour, v)
        if partner is not None:
          pairs.append((v, partner))
      try:
        families.append(WitnessFamily.from_pairs(pair_family_label(u, colour), pairs))
      except FamilyError as e:
        raise FamilyError(f"Correspondence at vertex {u} is not a matching: {e}") from e
  return tuple(families)
