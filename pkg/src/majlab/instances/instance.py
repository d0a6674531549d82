"""JSON instance documents.

An instance is a graph, per-vertex colour lists over named colours, a k and a
mode, optionally with a correspondence system::

  {
    "graph": {"order": 3, "edges": [[1, 2], [2, 3]], "directed": false},
    "lists": {"1": ["a", "b"], "2": ["a", "b"], "3": ["b", "c"]},
    "correspondence": [{"edge": [1, 2], "pairs": [["a", "b"]]}],
    "k": 2,
    "mode": "correspondence"
  }

`graph` may instead reference a built-in family,
{"family": "star", "params": {}, "seed": 0, "n": 10}, and the graph fields may
sit at the top level. `lists` may be {"uniform": [...]}. In correspondence mode
without a "correspondence" entry the lists are embedded (B_uv = common
colours); edges left out of a given "correspondence" array carry no bad pairs.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, Literal

from majlab.graph import FiniteDigraph, FiniteGraph, GraphError, build_graph, parse_edge_list
from majlab.restriction import (
  FamilyError,
  WitnessFamily,
  build_correspondence_families,
  build_neighbourhood_families,
  check_families,
)
from majlab.systems import (
  Colouring,
  ColourPalette,
  ConstraintSystem,
  CorrespondenceSystem,
  ListSystem,
  canonical_edge,
  list_to_correspondence,
  validate_correspondence,
)
from majlab.tower.families import FAMILIES, builtin_family, family_parameters

Mode = Literal["list", "correspondence"]


class InstanceError(ValueError):
  """Schema, range or matching violation at JSON `path`."""

  def __init__(self, path: str, message: str) -> None:
    super().__init__(f"{path}: {message}")
    self.path = path


@dataclass(frozen=True)
class GraphSource:
  """Reference to a built-in family prefix."""

  family: str
  n: int
  seed: int = 0
  params: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Instance:
  graph: FiniteGraph | FiniteDigraph
  palette: ColourPalette
  lists: ListSystem
  k: int
  mode: Mode = "list"
  correspondence: CorrespondenceSystem | None = None
  source: GraphSource | None = None

  @property
  def system(self) -> ConstraintSystem:
    if self.mode == "correspondence":
      assert self.correspondence is not None
      return self.correspondence
    return self.lists


##
# Parsing.
##


def _expect(cond: bool, path: str, message: str) -> None:
  if not cond:
    raise InstanceError(path, message)


def _is_int(value: Any) -> bool:
  return isinstance(value, int) and not isinstance(value, bool)


def _parse_graph(doc: Mapping[str, Any]) -> tuple[FiniteGraph | FiniteDigraph, GraphSource | None]:
  if "graph" in doc:
    node, path = doc["graph"], "$.graph"
    _expect(isinstance(node, Mapping), path, "must be an object")
  else:
    node, path = doc, "$"
  if "family" in node:
    return _parse_family(node, path)

  _expect("order" in node, f"{path}.order", "is required")
  order = node["order"]
  _expect(_is_int(order) and order >= 0, f"{path}.order", "must be a non-negative integer")
  directed = node.get("directed", False)
  _expect(isinstance(directed, bool), f"{path}.directed", "must be a boolean")
  edges = node.get("edges", [])
  _expect(isinstance(edges, list), f"{path}.edges", "must be an array")
  pairs = []
  for i, edge in enumerate(edges):
    where = f"{path}.edges[{i}]"
    _expect(
      isinstance(edge, list) and len(edge) == 2 and all(_is_int(x) for x in edge),
      where,
      "must be a pair of integers",
    )
    u, w = edge
    _expect(1 <= u <= order and 1 <= w <= order, where, f"vertex out of range [1, {order}]")
    _expect(u != w, where, "self-loops are not allowed")
    pairs.append((u, w))
  return build_graph(order, pairs, directed=directed), None


def _parse_family(
  node: Mapping[str, Any], path: str
) -> tuple[FiniteGraph | FiniteDigraph, GraphSource]:
  name = node["family"]
  _expect(name in FAMILIES, f"{path}.family", f"unknown family {name!r}")
  n = node.get("n")
  _expect(_is_int(n) and n >= 1, f"{path}.n", "must be a positive integer")
  seed = node.get("seed", 0)
  _expect(_is_int(seed) and seed >= 0, f"{path}.seed", "must be a non-negative integer")
  params = node.get("params", {})
  _expect(isinstance(params, Mapping), f"{path}.params", "must be an object")
  kwargs = dict(params)
  if "seed" in family_parameters(name):
    kwargs.setdefault("seed", seed)
  try:
    presentation = builtin_family(name, **kwargs)
  except (TypeError, ValueError) as e:
    raise InstanceError(f"{path}.params", str(e)) from e
  return presentation.materialize(n), GraphSource(name, n, seed, dict(params))


def _parse_names(value: Any, path: str) -> list[str]:
  _expect(isinstance(value, list), path, "must be an array of colour names")
  for i, name in enumerate(value):
    _expect(isinstance(name, str), f"{path}[{i}]", "must be a string")
  seen: set[str] = set()
  for i, name in enumerate(value):
    _expect(name not in seen, f"{path}[{i}]", f"duplicate colour {name!r}")
    seen.add(name)
  return value


def _parse_lists(value: Any, order: int) -> tuple[ColourPalette, dict[int, list[str]]]:
  _expect(isinstance(value, Mapping), "$.lists", "must be an object")
  if "uniform" in value:
    names = _parse_names(value["uniform"], "$.lists.uniform")
    named = {v: names for v in range(1, order + 1)}
  else:
    named = {}
    for key, names in value.items():
      where = f"$.lists.{key}"
      try:
        v = int(key)
      except (TypeError, ValueError):
        raise InstanceError(where, "list keys must be vertex numbers") from None
      _expect(1 <= v <= order, where, f"vertex out of range [1, {order}]")
      named[v] = _parse_names(names, where)
    missing = [v for v in range(1, order + 1) if v not in named]
    _expect(not missing, "$.lists", f"vertices without a list: {missing[:10]}")
  palette = ColourPalette.from_names(n for names in named.values() for n in names)
  return palette, named


def _parse_correspondence(
  value: Any,
  graph: FiniteGraph | FiniteDigraph,
  palette: ColourPalette,
  lists: ListSystem,
) -> CorrespondenceSystem:
  _expect(isinstance(value, list), "$.correspondence", "must be an array")
  pairs: dict[tuple[int, int], list[tuple[int, int]]] = {}
  where_of: dict[tuple[int, int], str] = {}
  for i, entry in enumerate(value):
    where = f"$.correspondence[{i}]"
    _expect(isinstance(entry, Mapping), where, "must be an object")
    edge = entry.get("edge")
    _expect(
      isinstance(edge, list) and len(edge) == 2 and all(_is_int(x) for x in edge),
      f"{where}.edge",
      "must be a pair of integers",
    )
    u, w = edge
    _expect(
      graph.has_edge(u, w) or graph.has_edge(w, u), f"{where}.edge", "is not an edge of the graph"
    )
    key = canonical_edge(u, w)
    _expect(key not in where_of, f"{where}.edge", f"edge {list(key)} listed twice")
    where_of[key] = where
    raw = entry.get("pairs", [])
    _expect(isinstance(raw, list), f"{where}.pairs", "must be an array")
    oriented = []
    for j, pair in enumerate(raw):
      at = f"{where}.pairs[{j}]"
      _expect(
        isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair),
        at,
        "must be a pair of colour names",
      )
      for name in pair:
        _expect(name in palette, at, f"unknown colour {name!r}")
      a, b = (palette.id_of(x) for x in pair)
      oriented.append((a, b) if u < w else (b, a))
    pairs[key] = oriented
  system = CorrespondenceSystem(lists, {key: frozenset(p) for key, p in pairs.items()})
  # Duplicates inside a B_uv collapse in the frozenset; catch them on the raw pairs.
  for key, oriented in pairs.items():
    left = [a for a, _ in oriented]
    right = [b for _, b in oriented]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
      raise InstanceError(
        f"{where_of[key]}.pairs", "bad pairs must form a matching (a colour is matched twice)"
      )
  validation = validate_correspondence(system, lists)
  if not validation.valid:
    first = validation.violations[0]
    raise InstanceError(
      f"{where_of[first.edge]}.pairs",
      "; ".join(str(v) for v in validation.violations),
    )
  return system


def instance_from_dict(doc: Any) -> Instance:
  """Validate a decoded JSON document.

  Raises:
    InstanceError: On the first violation, naming its JSON path.
  """
  _expect(isinstance(doc, Mapping), "$", "must be an object")
  try:
    graph, source = _parse_graph(doc)
  except GraphError as e:
    raise InstanceError("$.graph", str(e)) from e

  _expect("lists" in doc, "$.lists", "is required")
  palette, named = _parse_lists(doc["lists"], graph.order)
  lists = ListSystem.from_mapping(
    {v: [palette.id_of(n) for n in names] for v, names in named.items()}, graph.order
  )

  _expect("k" in doc, "$.k", "is required")
  k = doc["k"]
  _expect(_is_int(k) and k >= 2, "$.k", "must be an integer >= 2")

  mode = doc.get("mode", "correspondence" if "correspondence" in doc else "list")
  _expect(mode in ("list", "correspondence"), "$.mode", "must be 'list' or 'correspondence'")
  correspondence = None
  if "correspondence" in doc:
    _expect(mode == "correspondence", "$.mode", "must be 'correspondence' with a correspondence")
    correspondence = _parse_correspondence(doc["correspondence"], graph, palette, lists)
  elif mode == "correspondence":
    correspondence = list_to_correspondence(lists, graph)
  return Instance(graph, palette, lists, k, mode, correspondence, source)


def parse_instance(text: str) -> Instance:
  try:
    doc = json.loads(text)
  except json.JSONDecodeError as e:
    raise InstanceError("$", f"invalid JSON: {e}") from e
  return instance_from_dict(doc)


def instance_from_edge_list(
  text: str, k: int, directed: bool = False, palette: ColourPalette | None = None
) -> Instance:
  """Bare graph: every vertex gets the same list, by default c1..ck."""
  graph = parse_edge_list(text, directed=directed)
  palette = palette or ColourPalette.numbered(k)
  lists = ListSystem.uniform(range(1, len(palette) + 1), graph.order)
  return Instance(graph, palette, lists, k)


def load_instance(
  text: str,
  format: Literal["json", "edgelist"] = "json",
  k: int = 2,
  directed: bool = False,
) -> Instance:
  if format == "edgelist":
    try:
      return instance_from_edge_list(text, k, directed)
    except GraphError as e:
      raise InstanceError("$", str(e)) from e
  return parse_instance(text)


##
# Emission.
##


def emit_instance(instance: Instance) -> dict[str, Any]:
  """JSON-ready document with parse_instance(emit) == instance."""
  names = instance.palette.name_of
  if instance.source is not None:
    src = instance.source
    graph: dict[str, Any] = {
      "family": src.family,
      "n": src.n,
      "seed": src.seed,
      "params": dict(src.params),
    }
  else:
    graph = {
      "order": instance.graph.order,
      "edges": [list(e) for e in instance.graph.edge_list()],
      "directed": instance.graph.directed,
    }
  doc: dict[str, Any] = {
    "graph": graph,
    "lists": {
      str(v): [names(c) for c in instance.lists.list_of(v)] for v in instance.graph.vertices
    },
    "k": instance.k,
    "mode": instance.mode,
  }
  if instance.correspondence is not None:
    doc["correspondence"] = [
      {
        "edge": list(key),
        "pairs": [[names(a), names(b)] for a, b in sorted(pairs)],
      }
      for key, pairs in sorted(instance.correspondence.bad_pairs.items())
    ]
  return doc


def colouring_to_names(colouring: Colouring, palette: ColourPalette) -> dict[str, str]:
  return {str(v): palette.name_of(c) for v, c in colouring.as_dict().items()}


def colouring_from_names(value: Any, instance: Instance, path: str = "$.colouring") -> Colouring:
  """Colouring from a vertex -> colour-name object.

  Membership in the lists is left to the verifier.
  """
  _expect(isinstance(value, Mapping), path, "must be an object")
  assignment = {}
  for key, name in value.items():
    where = f"{path}.{key}"
    try:
      v = int(key)
    except (TypeError, ValueError):
      raise InstanceError(where, "keys must be vertex numbers") from None
    _expect(1 <= v <= instance.graph.order, where, "vertex out of range")
    _expect(isinstance(name, str) and name in instance.palette, where, f"unknown colour {name!r}")
    assignment[v] = instance.palette.id_of(name)
  missing = [v for v in instance.graph.vertices if v not in assignment]
  _expect(not missing, path, f"uncoloured vertices: {missing[:10]}")
  return Colouring.from_mapping(assignment, instance.graph.order)


##
# Witness families for the restrict command.
##


def parse_families(
  value: Any, instance: Instance, path: str = "$.families"
) -> tuple[WitnessFamily, ...]:
  """Families given extensionally or as "neighbourhoods" of a family graph.

  Extensional entries are {"label": ..., "vertices": [...]} (colour form) or
  {"label": ..., "pairs": [[v, colour], ...]} (pair form). "neighbourhoods"
  builds N(u), or X(u, c) in correspondence mode, for every declared
  infinite-degree vertex of the referenced family.
  """
  n = instance.graph.order
  if value == "neighbourhoods":
    src = instance.source
    _expect(src is not None, path, "'neighbourhoods' needs a family graph")
    assert src is not None
    kwargs = dict(src.params)
    if "seed" in family_parameters(src.family):
      kwargs.setdefault("seed", src.seed)
    presentation = builtin_family(src.family, **kwargs)
    if instance.mode == "correspondence":
      assert instance.correspondence is not None
      return build_correspondence_families(
        presentation, n, instance.lists, instance.correspondence
      )
    return build_neighbourhood_families(presentation, n)

  _expect(isinstance(value, list), path, "must be an array or 'neighbourhoods'")
  families = []
  for i, entry in enumerate(value):
    where = f"{path}[{i}]"
    _expect(isinstance(entry, Mapping), where, "must be an object")
    label = entry.get("label", f"X{i + 1}")
    _expect(isinstance(label, str), f"{where}.label", "must be a string")
    try:
      if "vertices" in entry:
        vertices = entry["vertices"]
        _expect(
          isinstance(vertices, list) and all(_is_int(v) for v in vertices),
          f"{where}.vertices",
          "must be an array of vertex numbers",
        )
        for j, v in enumerate(vertices):
          _expect(1 <= v <= n, f"{where}.vertices[{j}]", f"vertex out of range [1, {n}]")
        families.append(WitnessFamily.from_vertices(label, vertices))
      else:
        raw = entry.get("pairs")
        _expect(isinstance(raw, list), where, "needs 'vertices' or 'pairs'")
        pairs = []
        for j, pair in enumerate(raw):
          at = f"{where}.pairs[{j}]"
          _expect(
            isinstance(pair, list)
            and len(pair) == 2
            and _is_int(pair[0])
            and isinstance(pair[1], str),
            at,
            "must be [vertex, colour]",
          )
          _expect(1 <= pair[0] <= n, at, f"vertex out of range [1, {n}]")
          _expect(pair[1] in instance.palette, at, f"unknown colour {pair[1]!r}")
          pairs.append((pair[0], instance.palette.id_of(pair[1])))
        families.append(WitnessFamily.from_pairs(label, pairs))
    except FamilyError as e:
      raise InstanceError(where, str(e)) from e
  try:
    kinds = {f.kind for f in families}
    _expect(len(kinds) <= 1, path, "families must all be vertex sets or all pair sets")
    return check_families(families, kinds.pop() if kinds else "colour")
  except FamilyError as e:
    raise InstanceError(path, str(e)) from e
