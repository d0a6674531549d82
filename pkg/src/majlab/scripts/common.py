"""Shared plumbing of the command-line scripts."""

from __future__ import annotations

import json
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import asdict
from pathlib import Path
from typing import Any, Literal, TypeVar

from majlab.graph import GraphError
from majlab.instances import ExitCode, Instance, InstanceError, ResultDocument, load_instance
from majlab.restriction import FamilyError
from majlab.solvers import SearchSpaceError
from majlab.systems import ColouringError, ListSizeError
from majlab.utils.logging import print_error, print_info
from majlab.utils.os import dump_yaml, read_text, write_text

Format = Literal["json", "edgelist"]

INPUT_ERRORS = (InstanceError, GraphError, ColouringError, ListSizeError, FamilyError)

_CfgT = TypeVar("_CfgT")


def read_instance(path: str, format: Format, k: int | None, directed: bool) -> Instance:
  """Instance from a JSON document, or a bare edge list with uniform c1..ck lists."""
  if k is not None and k < 2:
    raise InstanceError("$.k", f"must be >= 2, got {k}")
  text = read_text(path)
  if format == "edgelist":
    return load_instance(text, "edgelist", k=k or 2, directed=directed)
  instance = load_instance(text)
  if k is not None and k != instance.k:
    instance = Instance(
      instance.graph,
      instance.palette,
      instance.lists,
      k,
      instance.mode,
      instance.correspondence,
      instance.source,
    )
  return instance


@contextmanager
def flag_errors() -> Iterator[None]:
  """Report a ValueError raised while building configs as an input error."""
  try:
    yield
  except INPUT_ERRORS:
    raise
  except ValueError as e:
    raise InstanceError("$", str(e)) from e


def read_json(path: str) -> Any:
  text = read_text(path)
  try:
    return json.loads(text)
  except json.JSONDecodeError as e:
    raise InstanceError("$", f"invalid JSON in {path}: {e}") from e


def write_result(doc: ResultDocument, output: str | None, cfg: Any) -> ExitCode:
  """Write the result document, plus `<output>.params.yaml` for file outputs."""
  write_text(output, doc.to_json())
  if output is not None and output != "-":
    dump_yaml(Path(f"{output}.params.yaml"), asdict(cfg))
    print_info(f"[INFO] Wrote {output}")
  return doc.exit_code


def guarded(run: Callable[[_CfgT], ExitCode], cfg: _CfgT) -> ExitCode:
  """Run a command, mapping input errors to exit code 2 and caps to 3."""
  try:
    return run(cfg)
  except INPUT_ERRORS as e:
    print_error(str(e))
    return ExitCode.INPUT_ERROR
  except SearchSpaceError as e:
    print_error(str(e))
    return ExitCode.RESOURCE_CAP
