"""Logging utilities for colored terminal output."""

import sys
from typing import TextIO

_COLORS = {
  "green": "\033[92m",
  "red": "\033[91m",
  "yellow": "\033[93m",
  "blue": "\033[94m",
  "cyan": "\033[96m",
  "magenta": "\033[95m",
}


def print_info(message: str, color: str = "green", file: TextIO | None = None) -> None:
  """Print information message with color.

  Messages go to stderr by default so that JSON written to stdout stays
  machine-readable.

  Args:
    message: The message to print.
    color: Color name ('green', 'red', 'yellow', 'blue', 'cyan', 'magenta').
    file: Stream to write to. Defaults to stderr.
  """
  stream = file if file is not None else sys.stderr
  if stream.isatty() and color in _COLORS:
    print(f"{_COLORS[color]}{message}\033[0m", file=stream)
  else:
    print(message, file=stream)


def print_warning(message: str) -> None:
  print_info(f"[WARN] {message}", color="yellow")


def print_error(message: str) -> None:
  print_info(f"[ERROR] {message}", color="red")
