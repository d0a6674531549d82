from majlab.restriction.families import (
  FamilyError,
  FamilyKind,
  WitnessFamily,
  check_families,
)
from majlab.restriction.ledger import Witness, WitnessLedger
from majlab.restriction.restrict import (
  RestrictionCfg,
  SublistAssignment,
  build_correspondence_families,
  build_neighbourhood_families,
  neighbourhood_label,
  pair_family_label,
  restrict_lists,
  restrict_pairs,
)
from majlab.restriction.schedule import (
  Diagonal,
  ScheduleItem,
  enumerate_schedule,
  iter_schedule,
)

__all__ = (
  "FamilyError",
  "FamilyKind",
  "WitnessFamily",
  "check_families",
  "Diagonal",
  "ScheduleItem",
  "iter_schedule",
  "enumerate_schedule",
  "Witness",
  "WitnessLedger",
  "RestrictionCfg",
  "SublistAssignment",
  "restrict_lists",
  "restrict_pairs",
  "neighbourhood_label",
  "pair_family_label",
  "build_neighbourhood_families",
  "build_correspondence_families",
)
