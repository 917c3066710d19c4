"""Text and JSON serialisation.

Graph files: first significant line "n m", then m edge lines "u v" or
"u v R" / "u v B" (all edges coloured or none), 0-based vertex ids,
"#" starts a comment.  Model files append "part i: v v ..." and optional
"root i: v" lines after the edges.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .graphs import BLUE, RED, Bipartition, ColoredGraph, Graph, OddCycle
from .models import MinorModel


def _significant_lines(text: str) -> list[list[str]]:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what}: expected integer, got {tok!r}") from None


def _parse_header_and_edges(
    rows: list[list[str]],
) -> tuple[int, list[tuple[int, int]], set[tuple[int, int]], int]:
    if not rows:
        raise ParseError("empty graph file")
    header = rows[0]
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {' '.join(header)!r}")
    n = _parse_int(header[0], "vertex count")
    m = _parse_int(header[1], "edge count")
    if len(rows) - 1 < m:
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges: list[tuple[int, int]] = []
    red: set[tuple[int, int]] = set()
    colored = 0
    for idx in range(1, 1 + m):
        row = rows[idx]
        if len(row) == 2:
            u, v = (_parse_int(t, "edge endpoint") for t in row)
        elif len(row) == 3:
            u, v = (_parse_int(t, "edge endpoint") for t in row[:2])
            if row[2] not in (RED, BLUE):
                raise ParseError(f"edge colour must be R or B, got {row[2]!r}")
            colored += 1
            if row[2] == RED:
                red.add((min(u, v), max(u, v)))
        else:
            raise ParseError(f"bad edge line: {' '.join(row)!r}")
        edges.append((u, v))
    if colored not in (0, m):
        raise ParseError("file mixes coloured and uncoloured edges")
    return n, edges, red, 1 + m


def parse_graph(text: str) -> Graph | ColoredGraph:
    """Parse a graph file, coloured or plain depending on the edge lines."""
    rows = _significant_lines(text)
    n, edges, red, consumed = _parse_header_and_edges(rows)
    if len(rows) != consumed:
        raise ParseError(f"unexpected trailing line: {' '.join(rows[consumed])!r}")
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if _was_colored(rows, consumed):
        return ColoredGraph(g, frozenset(red))
    return g


def _was_colored(rows: list[list[str]], consumed: int) -> bool:
    return any(len(row) == 3 for row in rows[1:consumed])


def expect_plain(parsed: Graph | ColoredGraph) -> Graph:
    if isinstance(parsed, ColoredGraph):
        raise ParseError("expected an uncoloured graph, got a coloured one")
    return parsed


def expect_colored(parsed: Graph | ColoredGraph) -> ColoredGraph:
    if isinstance(parsed, Graph):
        raise ParseError("expected a coloured graph, got an uncoloured one")
    return parsed


def parse_model(text: str) -> MinorModel:
    """Parse a host graph followed by part/root lines."""
    rows = _significant_lines(text)
    n, edges, red, consumed = _parse_header_and_edges(rows)
    if red or _was_colored(rows, consumed):
        raise ParseError("model hosts are uncoloured")
    try:
        host = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    parts: dict[int, tuple[int, ...]] = {}
    roots: dict[int, int] = {}
    for row in rows[consumed:]:
        if row[0] == "part" and len(row) >= 3 and row[1].endswith(":"):
            idx = _parse_int(row[1][:-1], "part index")
            if idx in parts:
                raise ParseError(f"duplicate part {idx}")
            parts[idx] = tuple(_parse_int(t, "part vertex") for t in row[2:])
        elif row[0] == "root" and len(row) == 3 and row[1].endswith(":"):
            idx = _parse_int(row[1][:-1], "root index")
            if idx in roots:
                raise ParseError(f"duplicate root {idx}")
            roots[idx] = _parse_int(row[2], "root vertex")
        else:
            raise ParseError(f"bad model line: {' '.join(row)!r}")
    if not parts:
        raise ParseError("model file has no parts")
    if sorted(parts) != list(range(len(parts))):
        raise ParseError("part indices must be 0..k-1")
    part_list = [parts[i] for i in range(len(parts))]
    for idx in roots:
        if idx not in parts:
            raise ParseError(f"root for unknown part {idx}")
    root_list = [roots.get(i, min(parts[i])) for i in range(len(parts))]
    try:
        return MinorModel.create(host, part_list, root_list)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def format_colored(cg: ColoredGraph) -> str:
    lines = [f"{cg.graph.vertex_count} {cg.graph.edge_count}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in cg.colored_edges())
    return "\n".join(lines) + "\n"


def format_model(model: MinorModel) -> str:
    lines = [format_graph(model.host).rstrip("\n")]
    for i, part in enumerate(model.parts):
        lines.append(f"part {i}: " + " ".join(str(v) for v in part))
        lines.append(f"root {i}: {model.roots[i]}")
    return "\n".join(lines) + "\n"


# JSON payload helpers (used by the CLI; stable key order throughout)


def graph_json(g: Graph) -> dict[str, Any]:
    return {
        "vertex_count": g.vertex_count,
        "edges": [[u, v] for u, v in g.sorted_edges],
    }


def graph_from_json(obj: Any) -> Graph:
    try:
        return Graph.from_edges(int(obj["vertex_count"]), obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph object: {exc}") from None


def colored_json(cg: ColoredGraph) -> dict[str, Any]:
    return {
        "vertex_count": cg.graph.vertex_count,
        "edges": [[u, v, c] for u, v, c in cg.colored_edges()],
    }


def colored_from_json(obj: Any) -> ColoredGraph:
    try:
        return ColoredGraph.from_edge_colors(int(obj["vertex_count"]), obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad coloured-graph object: {exc}") from None


def side_json(side: dict[int, int]) -> dict[str, str]:
    return {str(v): ("X", "Y")[s] for v, s in sorted(side.items())}


def side_from_json(obj: Any) -> dict[int, int]:
    try:
        return {int(v): {"X": 0, "Y": 1}[s] for v, s in obj.items()}
    except (AttributeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad side map: {exc}") from None


def bipartition_json(p: Bipartition) -> dict[str, Any]:
    return {"kind": "partition", "side": side_json(p.side)}


def odd_cycle_json(c: OddCycle) -> dict[str, Any]:
    return {"kind": "odd_cycle", "vertices": list(c.vertices)}


def dumps(payload: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
