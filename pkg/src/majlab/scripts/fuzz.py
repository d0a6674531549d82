"""Script to fuzz the finite solver against the verifier and the oracle."""

import sys
from dataclasses import dataclass
from typing import Literal

import tyro

from majlab.fuzz import FuzzCfg, fuzz
from majlab.instances import ExitCode, ResultDocument
from majlab.scripts.common import flag_errors, guarded, write_result
from majlab.solvers import OracleCfg
from majlab.utils.logging import print_info
from majlab.utils.random import seed_rng


@dataclass(frozen=True)
class FuzzConfig:
  seed: int = 1
  trials: int = 100
  max_order: int = 6
  k: int = 2
  mode: Literal["list", "correspondence"] = "list"
  edge_probability: float = 0.5
  palette_size: int | None = None
  max_colourings: int = 1 << 16
  """Instances with at most this many colourings are checked against the oracle."""
  output: str | None = None
  progress: bool = True


def run_fuzz(cfg: FuzzConfig) -> ExitCode:
  seed_rng(cfg.seed)
  with flag_errors():
    fuzz_cfg = FuzzCfg(
      seed=cfg.seed,
      trials=cfg.trials,
      max_order=cfg.max_order,
      k=cfg.k,
      mode=cfg.mode,
      edge_probability=cfg.edge_probability,
      palette_size=cfg.palette_size,
      oracle=OracleCfg(max_colourings=cfg.max_colourings),
      progress=cfg.progress,
    )
  report = fuzz(fuzz_cfg)
  print_info(str(report), color="cyan" if report.passed else "red")
  doc = ResultDocument(
    "fuzz",
    ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED,
    cfg.seed,
    extra=report.to_dict(),
  )
  return write_result(doc, cfg.output, cfg)


def main():
  cfg = tyro.cli(FuzzConfig, config=(tyro.conf.FlagConversionOff,))
  sys.exit(int(guarded(run_fuzz, cfg)))


if __name__ == "__main__":
  main()
