"""Plain-text edge lists: one `u v` pair per line, `#` starts a comment.

A comment line of the form `# order N` declares the order explicitly, which
keeps trailing isolated vertices. Otherwise the order is the largest endpoint.
"""

from __future__ import annotations

import re

from majlab.graph.graph import FiniteDigraph, FiniteGraph, GraphError, build_graph

_ORDER_DIRECTIVE = re.compile(r"^#\s*order\s+(\d+)\s*$")


def parse_edge_list(
  text: str, order: int | None = None, directed: bool = False
) -> FiniteGraph | FiniteDigraph:
  declared: int | None = None
  pairs: list[tuple[int, int]] = []
  for lineno, raw in enumerate(text.splitlines(), start=1):
    line = raw.strip()
    match = _ORDER_DIRECTIVE.match(line)
    if match:
      declared = int(match.group(1))
      continue
    line = line.split("#", 1)[0].strip()
    if not line:
      continue
    tokens = line.split()
    if len(tokens) != 2:
      raise GraphError(f"Line {lineno}: expected 'u v', got {raw!r}.")
    try:
      pairs.append((int(tokens[0]), int(tokens[1])))
    except ValueError:
      raise GraphError(f"Line {lineno}: non-integer vertex in {raw!r}.") from None

  if order is None:
    order = declared
  if order is None:
    order = max((max(p) for p in pairs), default=0)
  return build_graph(order, pairs, directed=directed)


def format_edge_list(graph: FiniteGraph | FiniteDigraph) -> str:
  kind = "digraph" if graph.directed else "graph"
  lines = [f"# majlab {kind}", f"# order {graph.order}"]
  lines.extend(f"{u} {w}" for u, w in graph.edge_list())
  return "\n".join(lines) + "\n"
