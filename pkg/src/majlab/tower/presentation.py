"""Lazily presented countable graphs.

A presentation enumerates v_1, v_2, ... and gives, for each n, the neighbours of
v_n among v_1..v_{n-1}. The prefix G_n is the union of these lower
neighbourhoods for n' <= n, so G_m is the induced prefix of G_n for m <= n.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from majlab.graph import FiniteDigraph, FiniteGraph, build_graph


def _no_lower(n: int) -> Iterable[int]:
  del n  # Unused.
  return ()


def _finite_degree(v: int) -> bool:
  del v  # Unused.
  return False


@dataclass(frozen=True)
class CountablePresentation:
  name: str
  lower_neighbourhood: Callable[[int], Iterable[int]]
  """n -> {m < n : v_m adjacent to v_n}. For digraphs: {m < n : arc v_n -> v_m}."""
  lower_in: Callable[[int], Iterable[int]] = _no_lower
  """Digraphs only: n -> {m < n : arc v_m -> v_n}."""
  infinite_degree: Callable[[int], bool] = _finite_degree
  """Declared d(v) = infinity (out-degree for digraphs). Trusted, not checked."""
  max_neighbour: Callable[[int], int] | None = None
  """Largest index of a (out-)neighbour of a finite-degree vertex, if known."""
  directed: bool = False
  acyclic: bool = False
  params: Mapping[str, Any] = field(default_factory=dict)

  def __post_init__(self) -> None:
    # Frozen dataclass: attach a per-instance cache through object.__setattr__.
    object.__setattr__(self, "_cache", lru_cache(maxsize=4)(self._build))

  def lower_out(self, n: int) -> frozenset[int]:
    return self._checked(n, self.lower_neighbourhood(n))

  def lower_in_neighbourhood(self, n: int) -> frozenset[int]:
    return self._checked(n, self.lower_in(n))

  def _checked(self, n: int, members: Iterable[int]) -> frozenset[int]:
    found = frozenset(members)
    bad = [m for m in found if not 1 <= m < n]
    if bad:
      raise ValueError(
        f"Presentation {self.name} gave lower neighbours {sorted(bad)} for v_{n}."
      )
    return found

  def infinite_degree_vertices(self, limit: int) -> tuple[int, ...]:
    return tuple(v for v in range(1, limit + 1) if self.infinite_degree(v))

  def _build(self, n: int) -> FiniteGraph | FiniteDigraph:
    edges: list[tuple[int, int]] = []
    for v in range(2, n + 1):
      edges.extend((v, m) for m in sorted(self.lower_out(v)))
      if self.directed:
        edges.extend((m, v) for m in sorted(self.lower_in_neighbourhood(v)))
    return build_graph(n, edges, directed=self.directed)

  def materialize(self, n: int) -> FiniteGraph | FiniteDigraph:
    """G_n, the subgraph induced by v_1..v_n."""
    if n < 1:
      raise ValueError(f"Prefix length must be >= 1, got {n}.")
    return self._cache(n)  # type: ignore[attr-defined]


def materialize_prefix(
  presentation: CountablePresentation, n: int
) -> FiniteGraph | FiniteDigraph:
  return presentation.materialize(n)
