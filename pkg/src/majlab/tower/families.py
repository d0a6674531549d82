"""Built-in countable presentations.

Each family is a configuration dataclass whose `build()` returns the
presentation; families are registered by name in `FAMILIES`.
"""

from __future__ import annotations

import abc
import math
from collections.abc import Callable
from dataclasses import asdict, dataclass, fields
from typing import TypeVar

from majlab.tower.presentation import CountablePresentation
from majlab.utils.random import make_rng

_CfgT = TypeVar("_CfgT", bound=type)

FAMILIES: dict[str, type[PresentationCfg]] = {}


def register_family(name: str) -> Callable[[_CfgT], _CfgT]:
  def decorator(cls: _CfgT) -> _CfgT:
    if name in FAMILIES:
      raise ValueError(f"Family {name!r} is already registered.")
    FAMILIES[name] = cls
    return cls

  return decorator


@dataclass
class PresentationCfg(abc.ABC):
  @abc.abstractmethod
  def build(self) -> CountablePresentation:
    raise NotImplementedError


def _max_or_zero(values) -> int:
  return max(values, default=0)


@register_family("ray")
@dataclass
class RayCfg(PresentationCfg):
  """One-way infinite path v1 - v2 - v3 - ..."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "ray",
      lambda n: (n - 1,) if n >= 2 else (),
      max_neighbour=lambda v: v + 1,
      params=asdict(self),
    )


##
# Two-way path: 0, 1, -1, 2, -2, ... are v1, v2, v3, v4, v5, ...
##


def _z_index(z: int) -> int:
  if z == 0:
    return 1
  return 2 * z if z > 0 else -2 * z + 1


def _z_value(n: int) -> int:
  if n == 1:
    return 0
  return n // 2 if n % 2 == 0 else -(n - 1) // 2


@register_family("two_way_path")
@dataclass
class TwoWayPathCfg(PresentationCfg):
  """Path on the integers, enumerated 0, 1, -1, 2, -2, ..."""

  def build(self) -> CountablePresentation:
    def lower(n: int):
      z = _z_value(n)
      return tuple(m for m in (_z_index(z - 1), _z_index(z + 1)) if m < n)

    def max_neighbour(v: int) -> int:
      z = _z_value(v)
      return max(_z_index(z - 1), _z_index(z + 1))

    return CountablePresentation(
      "two_way_path", lower, max_neighbour=max_neighbour, params=asdict(self)
    )


##
# Quarter grid N x N along Cantor diagonals.
##


def _cell_index(x: int, y: int) -> int:
  d = x + y
  return d * (d + 1) // 2 + y + 1


def _cell(n: int) -> tuple[int, int]:
  m = n - 1
  d = (math.isqrt(8 * m + 1) - 1) // 2
  y = m - d * (d + 1) // 2
  return d - y, y


def _cell_neighbours(n: int) -> list[int]:
  x, y = _cell(n)
  cells = [(x + 1, y), (x, y + 1)]
  if x > 0:
    cells.append((x - 1, y))
  if y > 0:
    cells.append((x, y - 1))
  return [_cell_index(a, b) for a, b in cells]


@register_family("grid")
@dataclass
class GridCfg(PresentationCfg):
  """Quarter-plane grid, cells numbered along anti-diagonals."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "grid",
      lambda n: tuple(m for m in _cell_neighbours(n) if m < n),
      max_neighbour=lambda v: max(_cell_neighbours(v)),
      params=asdict(self),
    )


@register_family("binary_tree")
@dataclass
class BinaryTreeCfg(PresentationCfg):
  """Infinite binary tree in heap order: the parent of v_n is v_{n // 2}."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "binary_tree",
      lambda n: (n // 2,) if n >= 2 else (),
      max_neighbour=lambda v: 2 * v + 1,
      params=asdict(self),
    )


@register_family("star")
@dataclass
class StarCfg(PresentationCfg):
  """Infinite star centred at v1."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "star",
      lambda n: (1,) if n >= 2 else (),
      infinite_degree=lambda v: v == 1,
      max_neighbour=lambda v: 1,
      params=asdict(self),
    )


@register_family("complete")
@dataclass
class CompleteCfg(PresentationCfg):
  """Countable complete graph; every vertex has infinite degree."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "complete",
      lambda n: range(1, n),
      infinite_degree=lambda v: True,
      params=asdict(self),
    )


def rado_adjacent(m: int, n: int) -> bool:
  """For m < n: bit m - 1 of n - 1 is set."""
  return bool(((n - 1) >> (m - 1)) & 1)


@register_family("rado")
@dataclass
class RadoCfg(PresentationCfg):
  """Rado graph via the BIT predicate on 0-based indices."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "rado",
      lambda n: tuple(m for m in range(1, n) if rado_adjacent(m, n)),
      infinite_degree=lambda v: True,
      params=asdict(self),
    )


@register_family("directed_ray")
@dataclass
class DirectedRayCfg(PresentationCfg):
  """Arcs v_n -> v_{n-1}; acyclic, out-degree 1 except at v1."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "directed_ray",
      lambda n: (n - 1,) if n >= 2 else (),
      max_neighbour=lambda v: v - 1,
      directed=True,
      acyclic=True,
      params=asdict(self),
    )


@register_family("directed_star")
@dataclass
class DirectedStarCfg(PresentationCfg):
  """Arcs v1 -> v_n for n >= 2; v1 has infinite out-degree."""

  def build(self) -> CountablePresentation:
    return CountablePresentation(
      "directed_star",
      lambda n: (),
      lower_in=lambda n: (1,) if n >= 2 else (),
      infinite_degree=lambda v: v == 1,
      max_neighbour=lambda v: 0,
      directed=True,
      acyclic=True,
      params=asdict(self),
    )


@register_family("random_dag")
@dataclass
class RandomDagCfg(PresentationCfg):
  """Each arc v_n -> v_m (m < n) present independently with probability density."""

  seed: int = 0
  density: float = 0.5

  def __post_init__(self) -> None:
    if not 0.0 <= self.density <= 1.0:
      raise ValueError(f"density must be in [0, 1], got {self.density}")

  def build(self) -> CountablePresentation:
    seed, density = self.seed, self.density

    def lower(n: int) -> tuple[int, ...]:
      draws = make_rng(seed, n).random(n - 1)
      return tuple(int(m) + 1 for m in (draws < density).nonzero()[0])

    return CountablePresentation(
      "random_dag",
      lower,
      max_neighbour=lambda v: _max_or_zero(lower(v)),
      directed=True,
      acyclic=True,
      params=asdict(self),
    )


def builtin_family(name: str, **params) -> CountablePresentation:
  """Build a registered presentation.

  Raises:
    ValueError: On an unknown family name or parameter.
  """
  if name not in FAMILIES:
    raise ValueError(f"Unknown family {name!r}; choose from {sorted(FAMILIES)}.")
  cls = FAMILIES[name]
  accepted = {f.name for f in fields(cls)}
  unknown = sorted(set(params) - accepted)
  if unknown:
    raise ValueError(f"Family {name!r} takes no parameter(s) {unknown}.")
  return cls(**params).build()


def family_parameters(name: str) -> tuple[str, ...]:
  return tuple(f.name for f in fields(FAMILIES[name]))


def list_families() -> list[tuple[str, str, tuple[str, ...]]]:
  """(name, one-line description, parameter names) per registered family."""
  rows = []
  for name, cls in FAMILIES.items():
    doc = (cls.__doc__ or "").strip().splitlines()
    rows.append((name, doc[0] if doc else "", family_parameters(name)))
  return rows
