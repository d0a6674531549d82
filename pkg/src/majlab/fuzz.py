"""Randomized cross-check of the finite solver.

Every local search result on a finite graph with k-uniform lists must be a
(1/k)-majority colouring, so any failure found here is an implementation bug.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Literal

import networkx as nx
from prettytable import PrettyTable
from tqdm import tqdm

from majlab.graph import FiniteGraph, build_graph
from majlab.instances import Instance, emit_instance
from majlab.solvers import (
  OracleCfg,
  brute_force_optimum,
  local_search,
  search_space_size,
)
from majlab.systems import (
  ColourPalette,
  ConstraintSystem,
  random_correspondence,
  random_lists,
  verify_majority,
)
from majlab.utils.random import make_rng

_SEED_BOUND = 2**31


@dataclass
class FuzzCfg:
  """Configuration for the fuzzing harness."""

  seed: int = 1
  trials: int = 100
  max_order: int = 6
  """Largest number of vertices of a trial graph."""
  k: int = 2
  mode: Literal["list", "correspondence"] = "list"
  edge_probability: float = 0.5
  """Erdos-Renyi edge probability."""
  palette_size: int | None = None
  """Colours the lists are drawn from; defaults to 2 * k."""
  oracle: OracleCfg = field(default_factory=lambda: OracleCfg(max_colourings=1 << 16))
  """Instances within `oracle.max_colourings` are also checked against the optimum."""
  progress: bool = False

  def __post_init__(self) -> None:
    if self.trials < 1:
      raise ValueError(f"trials must be >= 1, got {self.trials}")
    if self.max_order < 1:
      raise ValueError(f"max_order must be >= 1, got {self.max_order}")
    if self.k < 2:
      raise ValueError(f"k must be >= 2, got {self.k}")
    if not 0.0 <= self.edge_probability <= 1.0:
      raise ValueError(f"edge_probability must be in [0, 1], got {self.edge_probability}")
    if self.palette_size is not None and self.palette_size < self.k:
      raise ValueError(f"palette_size must be >= k, got {self.palette_size}")

  @property
  def resolved_palette_size(self) -> int:
    return 2 * self.k if self.palette_size is None else self.palette_size


@dataclass(frozen=True)
class Finding:
  trial: int
  kind: Literal["majority", "descent", "sandwich"]
  message: str
  instance: dict[str, Any]
  """Reproducing instance document."""


@dataclass(frozen=True)
class FuzzReport:
  trials: int
  findings: tuple[Finding, ...]
  histogram: dict[int, int]
  """Final conflict count -> number of trials."""
  oracle_checked: int

  @property
  def passed(self) -> bool:
    return not self.findings

  def to_dict(self) -> dict[str, Any]:
    return {
      "trials": self.trials,
      "failures": len(self.findings),
      "findings": [
        {"trial": f.trial, "kind": f.kind, "message": f.message, "instance": f.instance}
        for f in self.findings
      ],
      "histogram": {str(c): n for c, n in sorted(self.histogram.items())},
      "oracle_checked": self.oracle_checked,
    }

  def __str__(self) -> str:
    msg = (
      f"<FuzzReport> {self.trials} trials, {len(self.findings)} failure(s), "
      f"{self.oracle_checked} oracle-checked.\n"
    )
    table = PrettyTable()
    table.title = "Final Conflicts"
    table.field_names = ["Conflicts", "Trials"]
    for conflicts, count in sorted(self.histogram.items()):
      table.add_row([conflicts, count])
    msg += table.get_string()
    return msg


def random_instance(cfg: FuzzCfg, trial: int) -> Instance:
  """The instance of one trial; depends only on (cfg.seed, trial)."""
  rng = make_rng(cfg.seed, trial)
  order = int(rng.integers(1, cfg.max_order + 1))
  g = nx.gnp_random_graph(order, cfg.edge_probability, seed=int(rng.integers(_SEED_BOUND)))
  graph = build_graph(order, [(u + 1, w + 1) for u, w in g.edges()])
  palette = ColourPalette.numbered(cfg.resolved_palette_size)
  lists = random_lists(
    order, cfg.k, cfg.resolved_palette_size, int(rng.integers(_SEED_BOUND))
  )
  correspondence = None
  if cfg.mode == "correspondence":
    correspondence = random_correspondence(graph, lists, int(rng.integers(_SEED_BOUND)))
  return Instance(graph, palette, lists, cfg.k, cfg.mode, correspondence)


def _check(
  cfg: FuzzCfg, graph: FiniteGraph, system: ConstraintSystem
) -> tuple[list[tuple[str, str]], int, bool]:
  problems: list[tuple[str, str]] = []
  colouring, trace = local_search(graph, system, cfg.k)
  report = verify_majority(graph, colouring, system, cfg.k)
  if not report.passed:
    bad = [a.vertex for a in report.failures]
    problems.append(("majority", f"local search colouring fails at vertices {bad}"))
  if not trace.is_descending or len(trace) > trace.initial_conflicts:
    problems.append(("descent", "conflict counts do not strictly decrease"))

  checked = search_space_size(system, graph.order) <= cfg.oracle.max_colourings
  if checked:
    optimum = brute_force_optimum(graph, system, cfg.k, cfg.oracle)
    if not optimum.min_conflicts <= trace.final_conflicts <= graph.num_edges:
      problems.append(
        (
          "sandwich",
          f"expected {optimum.min_conflicts} <= {trace.final_conflicts} <= "
          f"{graph.num_edges}",
        )
      )
    if not verify_majority(graph, optimum.witness, system, cfg.k).passed:
      problems.append(("sandwich", "optimal colouring is not a majority colouring"))
  return problems, trace.final_conflicts, checked


def fuzz(cfg: FuzzCfg) -> FuzzReport:
  findings: list[Finding] = []
  histogram: Counter[int] = Counter()
  oracle_checked = 0
  for trial in tqdm(range(cfg.trials), desc="Fuzzing", disable=not cfg.progress):
    instance = random_instance(cfg, trial)
    assert isinstance(instance.graph, FiniteGraph)
    problems, final, checked = _check(cfg, instance.graph, instance.system)
    histogram[final] += 1
    oracle_checked += checked
    for kind, message in problems:
      findings.append(Finding(trial, kind, message, emit_instance(instance)))  # type: ignore[arg-type]
  return FuzzReport(cfg.trials, tuple(findings), dict(histogram), oracle_checked)
