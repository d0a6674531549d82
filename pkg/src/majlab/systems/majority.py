"""Bad-edge evaluation and (1/k)-majority verification.

A vertex passes when conflicts * k <= degree, compared in integers. On digraphs
conflicts and degree are counted over out-arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from prettytable import PrettyTable

from majlab.graph import Edge, FiniteDigraph, FiniteGraph
from majlab.systems.colouring import Colouring, ColouringError
from majlab.systems.correspondence import CorrespondenceSystem
from majlab.systems.lists import ListSystem
from majlab.systems.palette import ColourId

ConstraintSystem = ListSystem | CorrespondenceSystem
Host = FiniteGraph | FiniteDigraph


def is_bad_edge(
  graph: Host, edge: Edge, colouring: Colouring, system: ConstraintSystem
) -> bool:
  """Whether edge (or arc) uv is bad under χ.

  List mode: χ(u) = χ(v). Correspondence mode: (χ(u), χ(v)) ∈ B_uv.
  """
  u, w = edge
  if not graph.has_edge(u, w):
    raise ColouringError(f"Edge {edge} is not in the host graph.")
  return system.conflicts(u, colouring[u], w, colouring[w])


def vertex_conflicts(
  graph: Host,
  colouring: Colouring,
  system: ConstraintSystem,
  v: int,
  colour: ColourId | None = None,
) -> int:
  """Number of (out-)neighbours of v in conflict with v coloured `colour`.

  `colour` defaults to χ(v).
  """
  c = colouring[v] if colour is None else colour
  return sum(1 for w in graph.neighbours(v) if system.conflicts(v, c, w, colouring[w]))


def bad_edges(graph: Host, colouring: Colouring, system: ConstraintSystem) -> list[Edge]:
  return [
    (u, w)
    for u, w in graph.edge_list()
    if system.conflicts(u, colouring[u], w, colouring[w])
  ]


def total_conflicts(graph: Host, colouring: Colouring, system: ConstraintSystem) -> int:
  """Number of bad edges (arcs for digraphs)."""
  return len(bad_edges(graph, colouring, system))


def check_colouring(graph: Host, colouring: Colouring, system: ConstraintSystem) -> None:
  """Raise ColouringError unless χ colours exactly v_1..v_n from the lists."""
  if colouring.order < graph.order:
    raise ColouringError(f"Vertex {colouring.order + 1} is uncoloured.")
  if colouring.order > graph.order:
    raise ColouringError(
      f"Colouring has order {colouring.order}, graph has order {graph.order}."
    )
  if system.order < graph.order:
    raise ColouringError("Constraint system does not cover the graph.")
  for v in graph.vertices:
    if not system.contains(v, colouring[v]):
      raise ColouringError(f"Colour {colouring[v]} of vertex {v} is not in its list.")


@dataclass(frozen=True)
class VertexAudit:
  vertex: int
  degree: int
  conflicts: int
  passed: bool

  def threshold(self, k: int) -> Fraction:
    return Fraction(self.degree, k)


@dataclass(frozen=True)
class MajorityReport:
  """Per-vertex audit of a colouring against the 1/k threshold."""

  k: int
  directed: bool
  audits: tuple[VertexAudit, ...]

  @property
  def passed(self) -> bool:
    return all(a.passed for a in self.audits)

  @property
  def failures(self) -> tuple[VertexAudit, ...]:
    return tuple(a for a in self.audits if not a.passed)

  @property
  def total_conflicts(self) -> int:
    count = sum(a.conflicts for a in self.audits)
    return count if self.directed else count // 2

  def audit(self, v: int) -> VertexAudit:
    return self.audits[v - 1]

  def to_dict(self) -> dict:
    return {
      "k": self.k,
      "directed": self.directed,
      "passed": self.passed,
      "total_conflicts": self.total_conflicts,
      "vertices": [
        {
          "vertex": a.vertex,
          "degree": a.degree,
          "conflicts": a.conflicts,
          "threshold": str(a.threshold(self.k)),
          "passed": a.passed,
        }
        for a in self.audits
      ],
    }

  def __str__(self) -> str:
    status = "passes" if self.passed else f"fails at {len(self.failures)} vertex(es)"
    msg = f"<MajorityReport> k={self.k}, {len(self.audits)} vertices, {status}.\n"
    rows = self.failures or self.audits[:20]
    table = PrettyTable()
    table.title = "Failing Vertices" if self.failures else "Vertex Audit"
    table.field_names = ["Vertex", "Degree", "Conflicts", "Threshold", "Pass"]
    table.align["Threshold"] = "r"
    for a in rows:
      table.add_row([a.vertex, a.degree, a.conflicts, str(a.threshold(self.k)), a.passed])
    msg += table.get_string()
    return msg


def verify_majority(
  graph: Host, colouring: Colouring, system: ConstraintSystem, k: int
) -> MajorityReport:
  """Audit χ vertex by vertex: pass(v) iff conflicts(v) * k <= degree(v).

  Raises:
    ValueError: If k < 2.
    ColouringError: On an uncoloured vertex or a colour outside its list.
  """
  if k < 2:
    raise ValueError(f"k must be >= 2, got {k}.")
  check_colouring(graph, colouring, system)
  audits = []
  for v in graph.vertices:
    degree = graph.degree(v)
    conflicts = vertex_conflicts(graph, colouring, system, v)
    audits.append(VertexAudit(v, degree, conflicts, conflicts * k <= degree))
  return MajorityReport(k, graph.directed, tuple(audits))
