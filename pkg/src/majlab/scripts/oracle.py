"""Script to solve a small instance exactly by exhaustive search."""

import sys
from dataclasses import dataclass

import tyro

from majlab.graph import FiniteDigraph
from majlab.instances import ExitCode, ResultDocument, colouring_to_names, emit_instance
from majlab.scripts.common import Format, flag_errors, guarded, read_instance, write_result
from majlab.solvers import OracleCfg, brute_force_optimum, exhaustive_digraph_search
from majlab.systems import verify_majority
from majlab.utils.logging import print_info


@dataclass(frozen=True)
class OracleConfig:
  input: str = "-"
  output: str | None = None
  format: Format = "json"
  k: int | None = None
  directed: bool = False
  max_colourings: int = 10**7
  batch_size: int = 1 << 16
  device: str = "cpu"


def run_oracle(cfg: OracleConfig) -> ExitCode:
  instance = read_instance(cfg.input, cfg.format, cfg.k, cfg.directed)
  graph, system, k = instance.graph, instance.system, instance.k
  with flag_errors():
    oracle_cfg = OracleCfg(cfg.max_colourings, cfg.batch_size, cfg.device)

  if isinstance(graph, FiniteDigraph):
    found = exhaustive_digraph_search(graph, system, k, oracle_cfg)
    if found is None:
      print_info("[INFO] No (1/k)-majority colouring exists.", color="yellow")
      doc = ResultDocument(
        "oracle",
        ExitCode.VERIFICATION_FAILED,
        instance=emit_instance(instance),
        extra={"exists": False},
      )
      return write_result(doc, cfg.output, cfg)
    colouring, extra = found, {"exists": True}
  else:
    result = brute_force_optimum(graph, system, k, oracle_cfg)
    print_info(f"[INFO] Minimum number of bad edges: {result.min_conflicts}.")
    colouring, extra = result.witness, {"min_conflicts": result.min_conflicts}

  report = verify_majority(graph, colouring, system, k)
  doc = ResultDocument(
    "oracle",
    ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED,
    instance=emit_instance(instance),
    colouring=colouring_to_names(colouring, instance.palette),
    report=report.to_dict(),
    extra=extra,
  )
  return write_result(doc, cfg.output, cfg)


def main():
  cfg = tyro.cli(OracleConfig, config=(tyro.conf.FlagConversionOff,))
  sys.exit(int(guarded(run_oracle, cfg)))


if __name__ == "__main__":
  main()
