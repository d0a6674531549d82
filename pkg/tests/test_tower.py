"""Tests for presentations, prefix colourings, stabilization and certification."""

import pytest

from majlab.graph import FiniteDigraph, induced_prefix
from majlab.restriction import SublistAssignment, restrict_lists
from majlab.systems import Colouring, ListSystem
from majlab.tower import (
  FAMILIES,
  CertificationError,
  CountablePresentation,
  TowerCfg,
  TowerTrace,
  builtin_family,
  certify,
  list_families,
  materialize_prefix,
  prefix_colourings,
  resolve_presentation,
  run_tower,
  stabilize,
)


def edges_of(name: str, n: int, **params) -> set[tuple[int, int]]:
  return set(builtin_family(name, **params).materialize(n).edge_list())


def default_assignment(n: int, size: int = 3) -> SublistAssignment:
  assignment, _ = restrict_lists(n, ListSystem.uniform(range(1, size + 1), n), [], 0)
  return assignment


def synthetic_trace(colourings: list[tuple[int, ...]]) -> TowerTrace:
  n_max = len(colourings)
  return TowerTrace(
    "synthetic",
    2,
    tuple(Colouring(c) for c in colourings),
    default_assignment(n_max),
    ListSystem.uniform([1, 2], n_max),
    (0,) * n_max,
    (True,) * n_max,
  )


##
# Presentations.
##


def test_small_prefixes():
  assert edges_of("ray", 4) == {(1, 2), (2, 3), (3, 4)}
  assert edges_of("star", 4) == {(1, 2), (1, 3), (1, 4)}
  assert edges_of("binary_tree", 5) == {(1, 2), (1, 3), (2, 4), (2, 5)}
  assert edges_of("rado", 3) == {(1, 2), (2, 3)}
  assert edges_of("two_way_path", 3) == {(1, 2), (1, 3)}
  assert edges_of("two_way_path", 5) == {(1, 2), (1, 3), (2, 4), (3, 5)}
  assert edges_of("grid", 5) == {(1, 2), (1, 3), (2, 4), (2, 5), (3, 5)}
  assert len(edges_of("complete", 6)) == 15


def test_directed_prefixes():
  assert edges_of("directed_ray", 4) == {(2, 1), (3, 2), (4, 3)}
  assert edges_of("directed_star", 4) == {(1, 2), (1, 3), (1, 4)}
  dag = builtin_family("random_dag", seed=3, density=0.4).materialize(30)
  assert isinstance(dag, FiniteDigraph)
  assert all(u > w for u, w in dag.edge_list())
  assert edges_of("random_dag", 30, seed=3, density=0.4) == set(dag.edge_list())
  assert edges_of("random_dag", 30, seed=4, density=0.4) != set(dag.edge_list())


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_prefix_consistency(name):
  presentation = builtin_family(name)
  host = presentation.materialize(40)
  for m in (1, 2, 7, 23, 40):
    assert induced_prefix(host, m) == materialize_prefix(presentation, m)
  for n in range(2, 40):
    assert all(1 <= m < n for m in presentation.lower_out(n))


def test_metadata():
  assert builtin_family("star").infinite_degree_vertices(5) == (1,)
  assert builtin_family("complete").infinite_degree_vertices(3) == (1, 2, 3)
  assert builtin_family("ray").infinite_degree_vertices(50) == ()
  assert builtin_family("rado").max_neighbour is None
  assert builtin_family("directed_ray").acyclic
  names = [name for name, _, _ in list_families()]
  assert names == list(FAMILIES)
  assert dict((n, p) for n, _, p in list_families())["random_dag"] == ("seed", "density")


def test_invalid_presentations():
  with pytest.raises(ValueError, match="Unknown family"):
    builtin_family("torus")
  with pytest.raises(ValueError, match="takes no parameter"):
    builtin_family("ray", seed=1)
  with pytest.raises(ValueError):
    builtin_family("random_dag", density=1.5)
  broken = CountablePresentation("broken", lambda n: (n,))
  with pytest.raises(ValueError, match="lower neighbours"):
    broken.materialize(3)
  with pytest.raises(ValueError):
    builtin_family("ray").materialize(0)


##
# Prefix colourings.
##


@pytest.mark.parametrize("name", ["ray", "star", "binary_tree"])
def test_prefix_colourings(name):
  presentation = builtin_family(name)
  assignment = default_assignment(30)
  trace = prefix_colourings(presentation, assignment, 2, 30)
  assert trace.n_max == 30
  assert all(trace.verified)
  for n in range(1, 31):
    chi = trace.colouring(n)
    assert chi.order == n
    assert all(assignment.sublists.contains(v, chi[v]) for v in range(1, n + 1))
  assert trace.summary()["all_verified"]


def test_prefix_colourings_on_a_digraph():
  trace = prefix_colourings(builtin_family("directed_star"), default_assignment(10), 2, 10)
  assert trace.moves == (0,) * 10
  assert all(trace.verified)


def test_prefix_colouring_errors():
  assignment = default_assignment(10)
  with pytest.raises(ValueError):
    prefix_colourings(builtin_family("ray"), assignment, 2, 0)
  cyclic = CountablePresentation(
    "cycle", lambda n: (n - 1,) if n >= 2 else (), lower_in=lambda n: (1,) if n == 3 else (),
    directed=True,
  )
  with pytest.raises(ValueError, match="cyclic"):
    prefix_colourings(cyclic, assignment, 2, 5)
  with pytest.raises(ValueError):
    prefix_colourings(builtin_family("ray"), assignment, 2, 11)


##
# Stabilization.
##


def parity_colourings(n_max: int) -> list[tuple[int, ...]]:
  return [(1,) * n if n % 2 == 0 else (2,) * n for n in range(1, n_max + 1)]


def test_stabilize_keeps_the_majority_colour():
  stabilized = stabilize(synthetic_trace(parity_colourings(6)), t=2, survivor_floor=3)
  assert stabilized.colours == (1, 1)
  assert stabilized.survivors == ((2, 3, 4, 5, 6), (2, 4, 6), (2, 4, 6))
  assert not stabilized.truncated
  assert stabilized.n_star == 2
  assert stabilized.colouring() == Colouring((1, 1))
  assert stabilized.extended() == Colouring((1, 1))


def test_stabilize_truncates_below_the_floor():
  stabilized = stabilize(synthetic_trace(parity_colourings(6)), t=2, survivor_floor=4)
  assert stabilized.truncated
  assert stabilized.length == 0
  assert stabilized.survivors == ((2, 3, 4, 5, 6),)
  assert stabilized.to_dict()["survivor_counts"] == [5]


def test_stabilize_ties_go_to_the_lowest_colour():
  trace = synthetic_trace([(1,), (1, 1), (2, 2, 2), (1, 1, 1, 1)])
  stabilized = stabilize(trace, t=3, survivor_floor=1)
  assert stabilized.colours == (1, 1, 1)
  assert stabilized.survivors[-1] == (4,)
  assert stabilized.n_star == 4


def test_stabilize_errors():
  trace = synthetic_trace(parity_colourings(4))
  with pytest.raises(ValueError):
    stabilize(trace, t=5, survivor_floor=1)
  with pytest.raises(ValueError):
    stabilize(trace, t=0, survivor_floor=1)
  with pytest.raises(ValueError):
    stabilize(trace, t=2, survivor_floor=0)


##
# Certification.
##


def test_certify_needs_the_witness_families():
  star = builtin_family("star")
  assignment, ledger = restrict_lists(20, ListSystem.uniform([1, 2, 3], 20), [], 0)
  trace = prefix_colourings(star, assignment, 2, 20)
  stabilized = stabilize(trace, t=4, survivor_floor=1)
  assert stabilized.length == 4
  with pytest.raises(CertificationError):
    certify(star, stabilized, None, 2, 20)
  with pytest.raises(CertificationError):
    certify(star, stabilized, ledger, 2, 20)
  with pytest.raises(ValueError):
    certify(star, stabilized, ledger, 2, 3)


def test_certify_finite_degree():
  ray = builtin_family("ray")
  trace = prefix_colourings(ray, default_assignment(40), 2, 40)
  stabilized = stabilize(trace, t=10, survivor_floor=2)
  report = certify(ray, stabilized, None, 2, 40)
  assert report.passed
  assert not report.horizon_only
  assert report.infinite == ()
  assert [a.vertex for a in report.enclosed] == list(range(1, stabilized.length))
  assert "CertificationReport" in str(report)


##
# Pipeline.
##


def test_resolve_presentation():
  assert resolve_presentation(TowerCfg(family="star", directed=True)).name == "directed_star"
  assert resolve_presentation(TowerCfg(family="random_dag", seed=5)).params["seed"] == 5
  with pytest.raises(ValueError, match="no directed variant"):
    resolve_presentation(TowerCfg(family="grid", directed=True))
  with pytest.raises(ValueError, match="Unknown family"):
    resolve_presentation(TowerCfg(family="torus"))


def test_tower_cfg_validation():
  with pytest.raises(ValueError):
    TowerCfg(n_max=10, t=11)
  with pytest.raises(ValueError):
    TowerCfg(k=1)
  with pytest.raises(ValueError):
    TowerCfg(n_max=10, t=5, horizon=4)
  cfg = TowerCfg(n_max=10, t=5, horizon=20, k=3)
  assert cfg.prefix == 20
  assert cfg.resolved_list_size == 4
  assert cfg.resolved_palette_size == 8


def test_star_tower():
  result = run_tower(TowerCfg(family="star", n_max=64, t=8, survivor_floor=4, budget=60))
  assert result.passed
  (audit,) = result.certification.infinite
  assert audit.vertex == 1
  assert audit.count >= audit.required > 0
  assert audit.family_size is None


def test_complete_tower_is_horizon_only():
  result = run_tower(TowerCfg(family="complete", n_max=24, t=4, survivor_floor=2, budget=40))
  report = result.certification
  assert report.horizon_only
  assert [a.vertex for a in report.infinite] == list(range(1, result.stabilized.length + 1))
  assert "horizon only" in str(report)


@pytest.mark.parametrize("correspondence", ["identity", "random"])
def test_correspondence_tower(correspondence):
  cfg = TowerCfg(
    family="star",
    n_max=64,
    t=8,
    survivor_floor=4,
    budget=60,
    mode="correspondence",
    correspondence=correspondence,
  )
  result = run_tower(cfg)
  assert result.correspondence is not None
  assert result.ledger.kind == "pair"
  assert result.passed
  (audit,) = result.certification.infinite
  assert audit.family.startswith("X(1,")
  assert audit.family_size is not None
  assert audit.family_size >= audit.count


def test_directed_towers():
  star = run_tower(TowerCfg(family="star", directed=True, n_max=48, t=8, survivor_floor=4))
  assert star.presentation.directed
  assert star.passed
  dag = run_tower(
    TowerCfg(family="random_dag", density=0.2, n_max=40, t=8, survivor_floor=2, seed=3)
  )
  assert dag.passed


def test_tower_is_deterministic():
  cfg = TowerCfg(family="grid", n_max=60, t=10, survivor_floor=4, seed=7)
  assert run_tower(cfg).to_dict() == run_tower(cfg).to_dict()


@pytest.mark.slow
@pytest.mark.parametrize("family", ["ray", "grid", "binary_tree"])
def test_finite_degree_certification(family):
  result = run_tower(TowerCfg(family=family, n_max=512, t=64, survivor_floor=8, k=2))
  assert all(result.trace.verified)
  assert result.stabilized.length >= 1
  assert result.certification.enclosed
  failing = [a.vertex for a in result.certification.enclosed if not a.passed]
  assert failing == []


@pytest.mark.slow
@pytest.mark.parametrize(("family", "n_max", "t"), [("star", 512, 64), ("complete", 256, 32)])
def test_infinite_degree_certification(family, n_max, t):
  result = run_tower(TowerCfg(family=family, n_max=n_max, t=t, survivor_floor=8))
  stabilized, ledger = result.stabilized, result.ledger
  assert stabilized.length >= 1
  assert result.certification.infinite
  extended = stabilized.extended()
  for audit in result.certification.infinite:
    key = (audit.family, audit.colour)
    assert audit.count >= ledger.processed(*key) - ledger.shortfalls[key]
    assert audit.persistent
    for witness in ledger.witnesses(*key):
      assert witness.colour == audit.colour
      assert not result.assignment.sublists.contains(witness.vertex, audit.colour)
      if witness.vertex <= stabilized.n_star:
        assert extended[witness.vertex] != audit.colour
