"""majlab command line: one subcommand per script module."""

import sys
from collections.abc import Callable
from typing import Any

import tyro

from majlab.instances import ExitCode
from majlab.scripts.common import guarded
from majlab.scripts.families import FamiliesConfig, run_families
from majlab.scripts.fuzz import FuzzConfig, run_fuzz
from majlab.scripts.gen import GenConfig, run_gen
from majlab.scripts.oracle import OracleConfig, run_oracle
from majlab.scripts.restrict import RestrictConfig, run_restrict
from majlab.scripts.solve import SolveConfig, run_solve
from majlab.scripts.tower import TowerConfig, run_tower_command
from majlab.scripts.verify import VerifyConfig, run_verify

COMMANDS: dict[str, tuple[type, Callable[[Any], ExitCode]]] = {
  "solve": (SolveConfig, run_solve),
  "verify": (VerifyConfig, run_verify),
  "oracle": (OracleConfig, run_oracle),
  "restrict": (RestrictConfig, run_restrict),
  "tower": (TowerConfig, run_tower_command),
  "fuzz": (FuzzConfig, run_fuzz),
  "gen": (GenConfig, run_gen),
  "families": (FamiliesConfig, run_families),
}


def run(args: list[str] | None = None) -> ExitCode:
  cfg = tyro.extras.subcommand_cli_from_dict(
    {name: config for name, (config, _) in COMMANDS.items()},
    prog="majlab",
    args=args,
    config=(tyro.conf.FlagConversionOff,),
  )
  for config, runner in COMMANDS.values():
    if isinstance(cfg, config):
      return guarded(runner, cfg)
  raise AssertionError(f"Unhandled configuration {cfg!r}")


def main():
  sys.exit(int(run()))


if __name__ == "__main__":
  main()
