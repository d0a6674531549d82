"""Script to restrict (l+1)-lists to l-lists against witness families."""

import sys
from dataclasses import dataclass

import tyro

from majlab.instances import (
  ExitCode,
  InstanceError,
  ResultDocument,
  emit_instance,
  instance_from_dict,
  parse_families,
)
from majlab.restriction import Diagonal, RestrictionCfg, restrict_lists, restrict_pairs
from majlab.scripts.common import flag_errors, guarded, read_json, write_result
from majlab.utils.logging import print_info


@dataclass(frozen=True)
class RestrictConfig:
  input: str = "-"
  """Instance JSON with a "families" entry."""
  output: str | None = None
  budget: int = 300
  """Number of schedule items processed."""
  skip_absent: bool = True
  diagonal: Diagonal = "family"


def run_restrict(cfg: RestrictConfig) -> ExitCode:
  doc = read_json(cfg.input)
  instance = instance_from_dict(doc)
  if "families" not in doc:
    raise InstanceError("$.families", "is required")
  families = parse_families(doc["families"], instance)

  if cfg.budget < 0:
    raise InstanceError("$", f"budget must be >= 0, got {cfg.budget}")
  with flag_errors():
    rcfg = RestrictionCfg(skip_absent=cfg.skip_absent, diagonal=cfg.diagonal)
  n = instance.graph.order
  pair_form = bool(families) and families[0].kind == "pair"
  restrict = restrict_pairs if pair_form else restrict_lists
  assignment, ledger = restrict(n, instance.lists, families, cfg.budget, rcfg)
  print_info(str(ledger), color="cyan")

  names = instance.palette.name_of
  result = ResultDocument(
    "restrict",
    instance=emit_instance(instance),
    ledger=ledger.to_dict(),
    extra={
      "sublists": {
        str(v): [names(c) for c in assignment.sublist(v)] for v in range(1, n + 1)
      },
      "removed": {str(v): names(c) for v, c in enumerate(assignment.removed, start=1)},
    },
  )
  return write_result(result, cfg.output, cfg)


def main():
  cfg = tyro.cli(RestrictConfig, config=(tyro.conf.FlagConversionOff,))
  sys.exit(int(guarded(run_restrict, cfg)))


if __name__ == "__main__":
  main()
