from majlab.solvers.dag_greedy import dag_greedy
from majlab.solvers.local_search import (
  SearchStep,
  SearchTrace,
  improving_move,
  initial_colouring,
  is_locally_stable,
  local_search,
  stability_violations,
)
from majlab.solvers.oracle import (
  ColouringSpace,
  OracleCfg,
  OracleResult,
  SearchSpaceError,
  brute_force_optimum,
  exhaustive_digraph_search,
  search_space_size,
)

__all__ = (
  # Local search.
  "SearchStep",
  "SearchTrace",
  "initial_colouring",
  "improving_move",
  "local_search",
  "stability_violations",
  "is_locally_stable",
  # Acyclic digraphs.
  "dag_greedy",
  # Oracles.
  "OracleCfg",
  "OracleResult",
  "ColouringSpace",
  "SearchSpaceError",
  "brute_force_optimum",
  "exhaustive_digraph_search",
  "search_space_size",
)
