"""Script to run the compactness tower on a built-in countable family."""

import sys
from dataclasses import dataclass
from typing import Literal

import tyro

from majlab.instances import ExitCode, ResultDocument
from majlab.restriction import Diagonal, RestrictionCfg
from majlab.scripts.common import flag_errors, guarded, write_result
from majlab.tower import TowerCfg, resolve_presentation, run_tower
from majlab.utils.logging import print_info
from majlab.utils.random import seed_rng


@dataclass(frozen=True)
class TowerConfig:
  family: str = "ray"
  directed: bool = False
  seed: int = 0
  density: float = 0.5
  n_max: int = 512
  t: int = 64
  k: int = 2
  budget: int = 300
  survivor_floor: int = 8
  horizon: int | None = None
  mode: Literal["list", "correspondence"] = "list"
  correspondence: Literal["identity", "random"] = "identity"
  list_size: int | None = None
  palette_size: int | None = None
  skip_absent: bool = True
  diagonal: Diagonal = "family"
  output: str | None = None
  progress: bool = True


def run_tower_command(cfg: TowerConfig) -> ExitCode:
  seed_rng(cfg.seed)
  with flag_errors():
    tower_cfg = TowerCfg(
      family=cfg.family,
      directed=cfg.directed,
      seed=cfg.seed,
      density=cfg.density,
      n_max=cfg.n_max,
      t=cfg.t,
      k=cfg.k,
      budget=cfg.budget,
      survivor_floor=cfg.survivor_floor,
      horizon=cfg.horizon,
      mode=cfg.mode,
      correspondence=cfg.correspondence,
      list_size=cfg.list_size,
      palette_size=cfg.palette_size,
      restriction=RestrictionCfg(skip_absent=cfg.skip_absent, diagonal=cfg.diagonal),
      progress=cfg.progress,
    )
    resolve_presentation(tower_cfg)
  result = run_tower(tower_cfg)
  print_info(str(result.certification), color="cyan" if result.passed else "red")
  summary = result.to_dict()
  doc = ResultDocument(
    "tower",
    ExitCode.OK if result.passed else ExitCode.VERIFICATION_FAILED,
    cfg.seed,
    trace=summary["trace"],
    ledger=summary["ledger"],
    extra={
      "presentation": summary["presentation"],
      "stabilized": summary["stabilized"],
      "certification": summary["certification"],
    },
  )
  return write_result(doc, cfg.output, cfg)


def main():
  cfg = tyro.cli(TowerConfig, config=(tyro.conf.FlagConversionOff,))
  sys.exit(int(guarded(run_tower_command, cfg)))


if __name__ == "__main__":
  main()
