"""Script to find a (1/k)-majority colouring of a finite instance."""

import sys
from dataclasses import dataclass
from typing import Literal

import tyro

from majlab.graph import FiniteDigraph, is_acyclic
from majlab.instances import (
  ExitCode,
  InstanceError,
  ResultDocument,
  colouring_to_names,
  emit_instance,
)
from majlab.scripts.common import Format, flag_errors, guarded, read_instance, write_result
from majlab.solvers import OracleCfg, dag_greedy, exhaustive_digraph_search, local_search
from majlab.systems import verify_majority
from majlab.utils.logging import print_info
from majlab.utils.random import seed_rng


@dataclass(frozen=True)
class SolveConfig:
  input: str = "-"
  output: str | None = None
  format: Format = "json"
  k: int | None = None
  """Overrides the instance's k (required for edge lists, default 2)."""
  directed: bool = False
  """Read an edge list as a digraph."""
  seed: int = 0
  solver: Literal["auto", "local_search", "dag_greedy", "exhaustive"] = "auto"
  """auto: local search on graphs, dag_greedy on acyclic digraphs, exhaustive otherwise."""
  max_colourings: int = 10**7
  """Cap for the exhaustive digraph search."""


def run_solve(cfg: SolveConfig) -> ExitCode:
  seed_rng(cfg.seed)
  instance = read_instance(cfg.input, cfg.format, cfg.k, cfg.directed)
  graph, system, k = instance.graph, instance.system, instance.k
  with flag_errors():
    oracle_cfg = OracleCfg(max_colourings=cfg.max_colourings)

  solver = cfg.solver
  if solver == "auto":
    if not isinstance(graph, FiniteDigraph):
      solver = "local_search"
    else:
      solver = "dag_greedy" if is_acyclic(graph) else "exhaustive"
  print_info(f"[INFO] Solving {graph.order} vertices, {graph.num_edges} edges with {solver}.")

  trace = None
  if solver == "local_search":
    if isinstance(graph, FiniteDigraph):
      raise InstanceError("$.graph", "local_search needs an undirected graph")
    colouring, search = local_search(graph, system, k)
    trace = search.summary()
  elif not isinstance(graph, FiniteDigraph):
    raise InstanceError("$.graph", f"{solver} needs a digraph")
  elif solver == "dag_greedy":
    colouring = dag_greedy(graph, system, k)
  else:
    found = exhaustive_digraph_search(graph, system, k, oracle_cfg)
    if found is None:
      doc = ResultDocument(
        "solve",
        ExitCode.VERIFICATION_FAILED,
        cfg.seed,
        instance=emit_instance(instance),
        extra={"solver": solver, "exists": False},
      )
      return write_result(doc, cfg.output, cfg)
    colouring = found

  report = verify_majority(graph, colouring, system, k)
  print_info(str(report), color="cyan")
  doc = ResultDocument(
    "solve",
    ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED,
    cfg.seed,
    instance=emit_instance(instance),
    colouring=colouring_to_names(colouring, instance.palette),
    report=report.to_dict(),
    trace=trace,
    extra={"solver": solver},
  )
  return write_result(doc, cfg.output, cfg)


def main():
  cfg = tyro.cli(SolveConfig, config=(tyro.conf.FlagConversionOff,))
  sys.exit(int(guarded(run_solve, cfg)))


if __name__ == "__main__":
  main()
