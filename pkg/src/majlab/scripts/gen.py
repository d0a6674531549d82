"""Script to emit a prefix of a built-in family as a finite instance."""

import sys
from dataclasses import dataclass
from typing import Literal

import tyro

from majlab.graph import format_edge_list
from majlab.instances import ExitCode, Instance, emit_instance
from majlab.scripts.common import Format, flag_errors, guarded
from majlab.systems import ColourPalette, ListSystem, list_to_correspondence, random_lists
from majlab.tower import TowerCfg, resolve_presentation
from majlab.utils.os import dump_json, write_text


@dataclass(frozen=True)
class GenConfig:
  family: str = "ray"
  n: int = 16
  """Number of vertices of the prefix."""
  directed: bool = False
  seed: int = 0
  density: float = 0.5
  k: int = 2
  lists: Literal["uniform", "random"] = "uniform"
  """uniform: every vertex gets c1..ck; random: k colours from a palette of 2k."""
  mode: Literal["list", "correspondence"] = "list"
  output: str | None = None
  format: Format = "json"


def run_gen(cfg: GenConfig) -> ExitCode:
  with flag_errors():
    presentation = resolve_presentation(
      TowerCfg(
        family=cfg.family,
        directed=cfg.directed,
        seed=cfg.seed,
        density=cfg.density,
        n_max=cfg.n,
        t=1,
        k=cfg.k,
      )
    )
  graph = presentation.materialize(cfg.n)
  if cfg.format == "edgelist":
    write_text(cfg.output, format_edge_list(graph))
    return ExitCode.OK

  if cfg.lists == "random":
    palette = ColourPalette.numbered(2 * cfg.k)
    lists = random_lists(cfg.n, cfg.k, 2 * cfg.k, cfg.seed)
  else:
    palette = ColourPalette.numbered(cfg.k)
    lists = ListSystem.uniform(range(1, cfg.k + 1), cfg.n)
  correspondence = None
  if cfg.mode == "correspondence":
    correspondence = list_to_correspondence(lists, graph)
  instance = Instance(graph, palette, lists, cfg.k, cfg.mode, correspondence)
  write_text(cfg.output, dump_json(emit_instance(instance)))
  return ExitCode.OK


def main():
  cfg = tyro.cli(GenConfig, config=(tyro.conf.FlagConversionOff,))
  sys.exit(int(guarded(run_gen, cfg)))


if __name__ == "__main__":
  main()
