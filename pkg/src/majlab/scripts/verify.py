"""Script to verify a colouring against an instance."""

import sys
from dataclasses import dataclass

import tyro

from majlab.instances import (
  ExitCode,
  InstanceError,
  ResultDocument,
  colouring_from_names,
  colouring_to_names,
  emit_instance,
  instance_from_dict,
)
from majlab.scripts.common import Format, guarded, read_instance, read_json, write_result
from majlab.systems import verify_majority
from majlab.utils.logging import print_info


@dataclass(frozen=True)
class VerifyConfig:
  colouring: str
  """A result document, or a JSON object mapping vertex -> colour name."""
  input: str | None = None
  """Instance file; defaults to the instance embedded in the result document."""
  output: str | None = None
  format: Format = "json"
  k: int | None = None
  directed: bool = False


def run_verify(cfg: VerifyConfig) -> ExitCode:
  data = read_json(cfg.colouring)
  embedded = isinstance(data, dict) and "colouring" in data
  if cfg.input is not None:
    instance = read_instance(cfg.input, cfg.format, cfg.k, cfg.directed)
  elif embedded and data.get("instance") is not None:
    instance = instance_from_dict(data["instance"])
  else:
    raise InstanceError("$", "no instance: pass --input or a result document with one")
  assignment = data["colouring"] if embedded else data
  colouring = colouring_from_names(assignment, instance)

  report = verify_majority(instance.graph, colouring, instance.system, instance.k)
  print_info(str(report), color="cyan" if report.passed else "red")
  doc = ResultDocument(
    "verify",
    ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED,
    instance=emit_instance(instance),
    colouring=colouring_to_names(colouring, instance.palette),
    report=report.to_dict(),
  )
  return write_result(doc, cfg.output, cfg)


def main():
  cfg = tyro.cli(VerifyConfig, config=(tyro.conf.FlagConversionOff,))
  sys.exit(int(guarded(run_verify, cfg)))


if __name__ == "__main__":
  main()
