from majlab.instances.instance import (
  GraphSource,
  Instance,
  InstanceError,
  Mode,
  colouring_from_names,
  colouring_to_names,
  emit_instance,
  instance_from_dict,
  instance_from_edge_list,
  load_instance,
  parse_families,
  parse_instance,
)
from majlab.instances.result import ExitCode, ResultDocument

__all__ = (
  "Mode",
  "GraphSource",
  "Instance",
  "InstanceError",
  "parse_instance",
  "instance_from_dict",
  "instance_from_edge_list",
  "load_instance",
  "parse_families",
  "emit_instance",
  "colouring_to_names",
  "colouring_from_names",
  "ExitCode",
  "ResultDocument",
)
