"""Script to list the built-in countable families."""

from dataclasses import dataclass

import tyro
from prettytable import PrettyTable

from majlab.instances import ExitCode
from majlab.tower import FAMILIES, list_families


@dataclass(frozen=True)
class FamiliesConfig:
  keyword: str | None = None
  """Only list families whose name contains this keyword."""


def run_families(cfg: FamiliesConfig) -> ExitCode:
  """Print all registered families matching `keyword`."""
  table = PrettyTable(["#", "Family", "Description", "Directed", "Parameters"])
  table.title = "Available Countable Families"
  table.align["Family"] = "l"
  table.align["Description"] = "l"

  idx = 0
  for name, description, params in list_families():
    if cfg.keyword is not None and cfg.keyword not in name:
      continue
    directed = FAMILIES[name]().build().directed
    table.add_row([idx + 1, name, description, directed, ", ".join(params) or "-"])
    idx += 1

  print(table)
  if idx == 0:
    print(f"[INFO] No families matched filter: '{cfg.keyword}'")
  return ExitCode.OK


def main():
  run_families(tyro.cli(FamiliesConfig, config=(tyro.conf.FlagConversionOff,)))


if __name__ == "__main__":
  main()
