from __future__ import annotations

import datetime
import json
from dataclasses import asdict, dataclass, field
from enum import IntEnum
from typing import Any

from majlab import __version__
from majlab.utils.os import dump_json


class ExitCode(IntEnum):
  OK = 0
  VERIFICATION_FAILED = 1
  INPUT_ERROR = 2
  RESOURCE_CAP = 3


def _now() -> str:
  return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


@dataclass
class ResultDocument:
  """Output of one CLI command.

  Everything except `timestamp` is a deterministic function of the command's
  inputs and flags.
  """

  command: str
  status: int = ExitCode.OK
  seed: int | None = None
  instance: dict[str, Any] | None = None
  colouring: dict[str, str] | None = None
  """Vertex -> colour name."""
  report: dict[str, Any] | None = None
  """Majority audit."""
  trace: dict[str, Any] | None = None
  ledger: dict[str, Any] | None = None
  extra: dict[str, Any] = field(default_factory=dict)
  version: str = __version__
  timestamp: str = field(default_factory=_now)

  @property
  def exit_code(self) -> ExitCode:
    return ExitCode(self.status)

  def to_dict(self) -> dict[str, Any]:
    data = asdict(self)
    data["status"] = int(self.status)
    return data

  def to_json(self) -> str:
    return dump_json(self.to_dict())

  def without_timestamp(self) -> dict[str, Any]:
    data = self.to_dict()
    data.pop("timestamp")
    return data

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> ResultDocument:
    return cls(**data)

  @classmethod
  def from_json(cls, text: str) -> ResultDocument:
    return cls.from_dict(json.loads(text))
