import json
import sys
from pathlib import Path
from typing import Any, Dict

import yaml


def read_text(path: str | Path | None) -> str:
  """Read a whole file, or stdin when `path` is None or "-"."""
  if path is None or str(path) == "-":
    return sys.stdin.read()
  return Path(path).read_text()


def write_text(path: str | Path | None, text: str) -> None:
  """Write text to a file (creating parents), or stdout when `path` is None/"-"."""
  if path is None or str(path) == "-":
    sys.stdout.write(text)
    if not text.endswith("\n"):
      sys.stdout.write("\n")
    return
  path = Path(path)
  path.parent.mkdir(parents=True, exist_ok=True)
  path.write_text(text)


def dump_json(data: Any) -> str:
  """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
  return json.dumps(data, indent=2, sort_keys=True) + "\n"


def dump_yaml(filename: Path, data: Dict[str, Any]) -> None:
  """Write the resolved run parameters next to an output file.

  Tuples become lists so the file loads back with `yaml.safe_load`.
  """
  filename.parent.mkdir(parents=True, exist_ok=True)
  filename.write_text(yaml.safe_dump(_plain(data), sort_keys=False))


def _plain(value: Any) -> Any:
  if isinstance(value, dict):
    return {str(k): _plain(v) for k, v in value.items()}
  if isinstance(value, (list, tuple)):
    return [_plain(v) for v in value]
  if isinstance(value, Path):
    return str(value)
  return value
