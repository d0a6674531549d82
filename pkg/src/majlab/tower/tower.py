"""Prefix colourings, levelwise stabilization and certification.

For each n <= n_max the prefix G_n is coloured from the restricted sublists.
Stabilization then fixes χ(v_1), χ(v_2), ... one level at a time, keeping at
each level the prefix colourings that agree with the choice so far. The
certificate checks the stabilized colouring against G_horizon.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from prettytable import PrettyTable
from tqdm import tqdm

from majlab.graph import FiniteDigraph, FiniteGraph, induced_prefix
from majlab.restriction import (
  SublistAssignment,
  WitnessLedger,
  neighbourhood_label,
  pair_family_label,
)
from majlab.solvers import dag_greedy, local_search
from majlab.systems import (
  Colouring,
  ColourId,
  ConstraintSystem,
  CorrespondenceSystem,
  ListSizeError,
  verify_majority,
  vertex_conflicts,
)
from majlab.tower.presentation import CountablePresentation


class CertificationError(RuntimeError):
  """Certification cannot run, e.g. the witness ledger lacks a required family."""


@dataclass(frozen=True)
class TowerTrace:
  presentation: str
  k: int
  colourings: tuple[Colouring, ...]
  """χ_n at index n - 1."""
  sublists: SublistAssignment
  system: ConstraintSystem
  """The sublists, or the correspondence system over them."""
  moves: tuple[int, ...]
  """Local search moves spent on each prefix (0 for digraphs)."""
  verified: tuple[bool, ...]
  """Whether χ_n passed verify_majority on G_n."""

  @property
  def n_max(self) -> int:
    return len(self.colourings)

  def colouring(self, n: int) -> Colouring:
    return self.colourings[n - 1]

  def summary(self) -> dict:
    return {
      "presentation": self.presentation,
      "k": self.k,
      "n_max": self.n_max,
      "total_moves": sum(self.moves),
      "all_verified": all(self.verified),
    }


def prefix_colourings(
  presentation: CountablePresentation,
  sublists: SublistAssignment,
  k: int,
  n_max: int,
  correspondence: CorrespondenceSystem | None = None,
  progress: bool = False,
) -> TowerTrace:
  """χ_n for n = 1..n_max: local search on graphs, dag_greedy on acyclic digraphs.

  With `correspondence`, its bad pairs are used over the sublists.

  Raises:
    ValueError: On a cyclic directed presentation or n_max < 1.
    ListSizeError: If the sublists do not cover v_1..v_n_max with size k.
  """
  if n_max < 1:
    raise ValueError(f"n_max must be >= 1, got {n_max}.")
  if presentation.directed and not presentation.acyclic:
    raise ValueError(f"Presentation {presentation.name} is a cyclic digraph.")
  if sublists.order < n_max:
    raise ListSizeError(f"Sublists cover {sublists.order} vertices, n_max is {n_max}.")
  system: ConstraintSystem = sublists.sublists
  if correspondence is not None:
    system = correspondence.with_lists(sublists.sublists)
  system = system.restrict(n_max)
  system.require_uniform(k)

  host = presentation.materialize(n_max)
  colourings: list[Colouring] = []
  moves: list[int] = []
  verified: list[bool] = []
  for n in tqdm(
    range(1, n_max + 1), desc="Prefix colourings", disable=not progress
  ):
    graph = induced_prefix(host, n)
    local = system.restrict(n)
    if isinstance(graph, FiniteDigraph):
      chi = dag_greedy(graph, local, k)
      moves.append(0)
    else:
      chi, trace = local_search(graph, local, k)
      moves.append(len(trace))
    colourings.append(chi)
    verified.append(verify_majority(graph, chi, local, k).passed)
  return TowerTrace(
    presentation.name,
    k,
    tuple(colourings),
    sublists,
    system,
    tuple(moves),
    tuple(verified),
  )


##
# Stabilization.
##


@dataclass(frozen=True)
class StabilizedColouring:
  trace: TowerTrace
  requested: int
  """Requested stable prefix length t."""
  colours: tuple[ColourId, ...]
  """χ(v_1), ..., χ(v_length)."""
  survivors: tuple[tuple[int, ...], ...]
  """S_0 ⊇ S_1 ⊇ ... ⊇ S_length."""
  survivor_floor: int
  truncated: bool

  @property
  def length(self) -> int:
    return len(self.colours)

  @property
  def n_star(self) -> int:
    """The smallest surviving index."""
    return self.survivors[-1][0]

  def colouring(self) -> Colouring:
    return Colouring(self.colours)

  def extended(self) -> Colouring:
    """χ extended by the surviving prefix colouring χ_{n*}."""
    return self.trace.colouring(self.n_star)

  def to_dict(self) -> dict:
    return {
      "requested": self.requested,
      "length": self.length,
      "truncated": self.truncated,
      "survivor_floor": self.survivor_floor,
      "n_star": self.n_star,
      "colours": list(self.colours),
      "survivor_counts": [len(s) for s in self.survivors],
    }


def stabilize(trace: TowerTrace, t: int, survivor_floor: int) -> StabilizedColouring:
  """Fix χ(v_1..v_t) by most-frequent agreement among surviving prefix colourings.

  S_0 = {t, ..., n_max}. At level j, χ(v_j) is the colour most frequent among
  χ_n(v_j), n in S_{j-1} (ties: lowest colour id), and S_j keeps the agreeing n.
  Stops early, flagged as truncated, when a level would leave fewer than
  `survivor_floor` survivors.
  """
  if not 1 <= t <= trace.n_max:
    raise ValueError(f"t must be in [1, {trace.n_max}], got {t}.")
  if survivor_floor < 1:
    raise ValueError(f"survivor_floor must be >= 1, got {survivor_floor}.")

  current = tuple(range(t, trace.n_max + 1))
  survivors = [current]
  colours: list[ColourId] = []
  truncated = len(current) < survivor_floor
  if not truncated:
    for j in range(1, t + 1):
      votes = Counter(trace.colouring(n)[j] for n in current)
      colour = min(votes, key=lambda c: (-votes[c], c))
      agreeing = tuple(n for n in current if trace.colouring(n)[j] == colour)
      if len(agreeing) < survivor_floor:
        truncated = True
        break
      colours.append(colour)
      survivors.append(agreeing)
      current = agreeing
  return StabilizedColouring(
    trace, t, tuple(colours), tuple(survivors), survivor_floor, truncated
  )


##
# Certification.
##


@dataclass(frozen=True)
class EnclosedAudit:
  vertex: int
  degree: int
  conflicts: int
  passed: bool


@dataclass(frozen=True)
class WitnessAudit:
  vertex: int
  colour: ColourId
  family: str
  count: int
  """Neighbours within the horizon whose sublist rules out a conflict."""
  processed: int
  deficit: int
  required: int
  """Ledger witnesses of the family lying within the horizon."""
  family_size: int | None
  """Pair-form only: materialized size of the family within the horizon."""
  persistent: bool
  """No ledger witness conflicts with the vertex under χ_{n*}."""

  @property
  def passed(self) -> bool:
    return self.persistent and self.count >= self.required

  @property
  def finite_family(self) -> bool:
    return self.family_size is not None and self.family_size == 0


@dataclass(frozen=True)
class CertificationReport:
  presentation: str
  k: int
  t: int
  horizon: int
  n_star: int
  horizon_only: bool
  """Enclosure was judged inside G_horizon, without max_neighbour metadata."""
  enclosed: tuple[EnclosedAudit, ...]
  infinite: tuple[WitnessAudit, ...]

  @property
  def passed(self) -> bool:
    return all(a.passed for a in self.enclosed) and all(a.passed for a in self.infinite)

  def to_dict(self) -> dict:
    return {
      "presentation": self.presentation,
      "k": self.k,
      "t": self.t,
      "horizon": self.horizon,
      "n_star": self.n_star,
      "horizon_only": self.horizon_only,
      "passed": self.passed,
      "enclosed": [
        {"vertex": a.vertex, "degree": a.degree, "conflicts": a.conflicts, "passed": a.passed}
        for a in self.enclosed
      ],
      "infinite": [
        {
          "vertex": a.vertex,
          "colour": a.colour,
          "family": a.family,
          "count": a.count,
          "processed": a.processed,
          "deficit": a.deficit,
          "required": a.required,
          "family_size": a.family_size,
          "persistent": a.persistent,
          "passed": a.passed,
        }
        for a in self.infinite
      ],
    }

  def __str__(self) -> str:
    failing = sum(not a.passed for a in self.enclosed)
    msg = (
      f"<CertificationReport> {self.presentation}: t={self.t}, horizon={self.horizon}, "
      f"n*={self.n_star}, {len(self.enclosed)} enclosed ({failing} failing)"
      f"{' [horizon only]' if self.horizon_only else ''}.\n"
    )
    if self.infinite:
      table = PrettyTable()
      table.title = "Infinite-Degree Vertices"
      table.field_names = ["Vertex", "Colour", "Count", "Processed", "Deficit", "Pass"]
      for a in self.infinite:
        table.add_row([a.vertex, a.colour, a.count, a.processed, a.deficit, a.passed])
      msg += table.get_string()
    return msg


def _is_enclosed(
  presentation: CountablePresentation, graph: FiniteGraph | FiniteDigraph, v: int, t: int
) -> bool:
  if presentation.max_neighbour is not None:
    return presentation.max_neighbour(v) <= t
  return all(w <= t for w in graph.neighbours(v))


def certify(
  presentation: CountablePresentation,
  stabilized: StabilizedColouring,
  ledger: WitnessLedger | None,
  k: int,
  horizon: int,
) -> CertificationReport:
  """Audit the stabilized colouring over G_horizon.

  Finite-degree vertices whose (out-)neighbourhood lies in [1, t] must have
  conflicts * k <= degree. Each declared infinite-degree v_i <= t must have at
  least as many neighbours whose sublist rules out a conflict as its ledger
  recorded witnesses within the horizon, and none of those witnesses may
  conflict with v_i under χ_{n*}.

  Raises:
    ValueError: If horizon < t.
    CertificationError: If the ledger lacks the family of an infinite-degree
      vertex.
  """
  t = stabilized.length
  if horizon < max(t, 1):
    raise ValueError(f"horizon must be >= t = {t}, got {horizon}.")
  trace = stabilized.trace
  system = trace.system
  sublists = trace.sublists.sublists
  correspondence = isinstance(system, CorrespondenceSystem)
  graph = presentation.materialize(horizon)
  extended = stabilized.extended()
  n_star = stabilized.n_star

  enclosed: list[EnclosedAudit] = []
  infinite: list[WitnessAudit] = []
  if t >= 1:
    prefix = induced_prefix(graph, t)
    local = system.restrict(t)
    chi = stabilized.colouring()
    for v in range(1, t + 1):
      if presentation.infinite_degree(v) or not _is_enclosed(presentation, graph, v, t):
        continue
      degree = prefix.degree(v)
      conflicts = vertex_conflicts(prefix, chi, local, v)
      enclosed.append(EnclosedAudit(v, degree, conflicts, conflicts * k <= degree))

  for v in presentation.infinite_degree_vertices(t):
    colour = stabilized.colours[v - 1]
    if correspondence:
      label, key_colour = pair_family_label(v, colour), None
    else:
      label, key_colour = neighbourhood_label(v), colour
    if ledger is None or not ledger.has_family(label):
      raise CertificationError(
        f"Witness ledger has no family {label} for infinite-degree vertex {v}."
      )

    count = 0
    family_size = 0
    for w in graph.neighbours(v):
      if w > sublists.order:
        continue
      partner = system.partner(v, colour, w) if correspondence else colour
      if partner is None:
        continue
      family_size += 1
      if not sublists.contains(w, partner):
        count += 1

    persistent = True
    for witness in ledger.witnesses(label, key_colour):
      if sublists.contains(witness.vertex, witness.colour):
        persistent = False
      elif witness.vertex <= n_star and system.conflicts(
        v, colour, witness.vertex, extended[witness.vertex]
      ):
        persistent = False
    required = sum(1 for w in ledger.witnesses(label, key_colour) if w.vertex <= horizon)
    infinite.append(
      WitnessAudit(
        v,
        colour,
        label,
        count,
        ledger.processed(label, key_colour),
        ledger.deficit(label, key_colour),
        required,
        family_size if correspondence else None,
        persistent,
      )
    )

  return CertificationReport(
    presentation.name,
    k,
    t,
    horizon,
    n_star,
    presentation.max_neighbour is None,
    tuple(enclosed),
    tuple(infinite),
  )
