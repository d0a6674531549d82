from majlab.tower.families import (
  FAMILIES,
  PresentationCfg,
  builtin_family,
  family_parameters,
  list_families,
  register_family,
)
from majlab.tower.pipeline import TowerCfg, TowerResult, resolve_presentation, run_tower
from majlab.tower.presentation import CountablePresentation, materialize_prefix
from majlab.tower.tower import (
  CertificationError,
  CertificationReport,
  EnclosedAudit,
  StabilizedColouring,
  TowerTrace,
  WitnessAudit,
  certify,
  prefix_colourings,
  stabilize,
)

__all__ = (
  # Presentations.
  "CountablePresentation",
  "materialize_prefix",
  "PresentationCfg",
  "FAMILIES",
  "register_family",
  "builtin_family",
  "family_parameters",
  "list_families",
  # Compactness.
  "TowerTrace",
  "prefix_colourings",
  "StabilizedColouring",
  "stabilize",
  "CertificationError",
  "CertificationReport",
  "EnclosedAudit",
  "WitnessAudit",
  "certify",
  # Pipeline.
  "TowerCfg",
  "TowerResult",
  "resolve_presentation",
  "run_tower",
)
