from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from majlab.restriction import (
  RestrictionCfg,
  SublistAssignment,
  WitnessFamily,
  WitnessLedger,
  build_correspondence_families,
  build_neighbourhood_families,
  restrict_lists,
  restrict_pairs,
)
from majlab.systems import (
  CorrespondenceSystem,
  ListSystem,
  list_to_correspondence,
  random_correspondence,
  random_lists,
)
from majlab.tower.families import FAMILIES, builtin_family, family_parameters
from majlab.tower.presentation import CountablePresentation
from majlab.tower.tower import (
  CertificationReport,
  StabilizedColouring,
  TowerTrace,
  certify,
  prefix_colourings,
  stabilize,
)
from majlab.utils.logging import print_info, print_warning


@dataclass
class TowerCfg:
  """Configuration for one end-to-end tower run."""

  family: str = "ray"
  """Registered presentation name."""
  directed: bool = False
  """Use the directed variant of `family` (e.g. ray -> directed_ray)."""
  seed: int = 0
  """Seed for lists, correspondence matchings and seeded families."""
  density: float = 0.5
  """Arc density, for families that take one."""
  n_max: int = 512
  t: int = 64
  """Requested stable prefix length."""
  k: int = 2
  budget: int = 300
  """Number of restriction schedule items processed."""
  survivor_floor: int = 8
  horizon: int | None = None
  """Certification horizon; defaults to n_max."""
  mode: Literal["list", "correspondence"] = "list"
  correspondence: Literal["identity", "random"] = "identity"
  """How the correspondence system is built in correspondence mode."""
  list_size: int | None = None
  """Size of the lists before restriction; defaults to k + 1."""
  palette_size: int | None = None
  """Colours the lists are drawn from; defaults to 2 * list_size."""
  restriction: RestrictionCfg = field(default_factory=RestrictionCfg)
  progress: bool = False

  def __post_init__(self) -> None:
    if self.k < 2:
      raise ValueError(f"k must be >= 2, got {self.k}")
    if self.n_max < 1:
      raise ValueError(f"n_max must be >= 1, got {self.n_max}")
    if not 1 <= self.t <= self.n_max:
      raise ValueError(f"t must be in [1, n_max], got {self.t}")
    if self.budget < 0:
      raise ValueError(f"budget must be >= 0, got {self.budget}")
    if self.survivor_floor < 1:
      raise ValueError(f"survivor_floor must be >= 1, got {self.survivor_floor}")
    if self.horizon is not None and self.horizon < self.t:
      raise ValueError(f"horizon must be >= t, got {self.horizon}")

  @property
  def resolved_horizon(self) -> int:
    return self.n_max if self.horizon is None else self.horizon

  @property
  def prefix(self) -> int:
    """Vertices covered by the lists and the restriction."""
    return max(self.n_max, self.resolved_horizon)

  @property
  def resolved_list_size(self) -> int:
    return self.k + 1 if self.list_size is None else self.list_size

  @property
  def resolved_palette_size(self) -> int:
    if self.palette_size is None:
      return 2 * self.resolved_list_size
    return self.palette_size


@dataclass(frozen=True)
class TowerResult:
  presentation: CountablePresentation
  lists: ListSystem
  correspondence: CorrespondenceSystem | None
  families: tuple[WitnessFamily, ...]
  assignment: SublistAssignment
  ledger: WitnessLedger
  trace: TowerTrace
  stabilized: StabilizedColouring
  certification: CertificationReport

  @property
  def passed(self) -> bool:
    return (
      all(self.trace.verified)
      and not self.stabilized.truncated
      and self.certification.passed
    )

  def to_dict(self) -> dict:
    return {
      "presentation": {
        "name": self.presentation.name,
        "directed": self.presentation.directed,
        "params": dict(self.presentation.params),
      },
      "trace": self.trace.summary(),
      "stabilized": self.stabilized.to_dict(),
      "ledger": self.ledger.to_dict(),
      "certification": self.certification.to_dict(),
    }


def resolve_presentation(cfg: TowerCfg) -> CountablePresentation:
  """Build the configured family, switching to its directed variant if asked."""
  name = cfg.family
  if cfg.directed and f"directed_{name}" in FAMILIES:
    name = f"directed_{name}"
  if name not in FAMILIES:
    raise ValueError(f"Unknown family {name!r}; choose from {sorted(FAMILIES)}.")
  offered = {"seed": cfg.seed, "density": cfg.density}
  params = {key: offered[key] for key in family_parameters(name) if key in offered}
  presentation = builtin_family(name, **params)
  if cfg.directed and not presentation.directed:
    raise ValueError(f"Family {name!r} has no directed variant.")
  return presentation


def run_tower(cfg: TowerCfg) -> TowerResult:
  """Lists, restriction, prefix colourings, stabilization and certification."""
  presentation = resolve_presentation(cfg)
  prefix = cfg.prefix
  lists = random_lists(
    prefix, cfg.resolved_list_size, cfg.resolved_palette_size, cfg.seed
  )

  correspondence = None
  if cfg.mode == "correspondence":
    host = presentation.materialize(prefix)
    if cfg.correspondence == "identity":
      correspondence = list_to_correspondence(lists, host)
    else:
      correspondence = random_correspondence(host, lists, cfg.seed)
    families = build_correspondence_families(
      presentation, prefix, lists, correspondence, centres=cfg.t
    )
    assignment, ledger = restrict_pairs(
      prefix, lists, families, cfg.budget, cfg.restriction
    )
  else:
    families = build_neighbourhood_families(presentation, prefix, centres=cfg.t)
    assignment, ledger = restrict_lists(
      prefix, lists, families, cfg.budget, cfg.restriction
    )
  print_info(
    f"[INFO] Restricted {prefix} lists over {len(families)} families "
    f"({len(ledger.schedule)} items)."
  )

  trace = prefix_colourings(
    presentation, assignment, cfg.k, cfg.n_max, correspondence, cfg.progress
  )
  stabilized = stabilize(trace, cfg.t, cfg.survivor_floor)
  if stabilized.truncated:
    print_warning(f"Stabilization stopped at length {stabilized.length} of {cfg.t}.")
  report = certify(presentation, stabilized, ledger, cfg.k, cfg.resolved_horizon)
  return TowerResult(
    presentation,
    lists,
    correspondence,
    families,
    assignment,
    ledger,
    trace,
    stabilized,
    report,
  )
