from majlab.systems.colouring import Colouring, ColouringError
from majlab.systems.correspondence import (
  ColourPair,
  CorrespondenceSystem,
  CorrespondenceValidation,
  Violation,
  canonical_edge,
  list_to_correspondence,
  validate_correspondence,
)
from majlab.systems.lists import ListSizeError, ListSystem
from majlab.systems.majority import (
  ConstraintSystem,
  MajorityReport,
  VertexAudit,
  bad_edges,
  check_colouring,
  is_bad_edge,
  total_conflicts,
  verify_majority,
  vertex_conflicts,
)
from majlab.systems.palette import ColourId, ColourPalette
from majlab.systems.random import random_correspondence, random_lists, random_matching

__all__ = (
  "ColourId",
  "ColourPalette",
  "ColourPair",
  "ListSystem",
  "ListSizeError",
  "CorrespondenceSystem",
  "CorrespondenceValidation",
  "Violation",
  "Colouring",
  "ColouringError",
  "ConstraintSystem",
  "MajorityReport",
  "VertexAudit",
  "canonical_edge",
  "list_to_correspondence",
  "validate_correspondence",
  "is_bad_edge",
  "vertex_conflicts",
  "bad_edges",
  "total_conflicts",
  "check_colouring",
  "verify_majority",
  # Generators.
  "random_lists",
  "random_matching",
  "random_correspondence",
)
