"""Incremental RB-bipartite topological clique in a 2-coloured complete
graph.

Branch vertices arrive one at a time.  A new vertex sits on the side
where more of its edges to existing branch vertices survive (Red kept
crossing, Blue kept within), and each surviving edge becomes a direct
path.  Every missing pair is patched with one or two fresh internal
vertices found by parity-forcing; when the target parity is R-even the
search runs with the colours of all new-vertex edges swapped, which turns
the task back into the R-odd case without touching any other edge.  If no
patch exists the free vertices form a complete RB-bipartite graph and the
first t of them give the clique outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .errors import HostTooSmall
from .graphs import RED, ColoredGraph, Graph, edge_key
from .rb import RBBipartition, rb_certify


def required_host_order(t: int) -> int:
    """Free vertices needed at every step: 2t plus the final footprint."""
    return 2 * t + 2 + comb(t + 1, 2)


def budget_cap(t: int) -> int:
    """The builder never uses more vertices than this."""
    return 1 + comb(t + 1, 2)


@dataclass(frozen=True)
class TopologicalModel:
    """Subdivided clique: branch vertices, one path per pair (endpoints
    included), and a side for every used vertex."""

    branch: tuple[int, ...]
    paths: Mapping[tuple[int, int], tuple[int, ...]]
    side: Mapping[int, int]
    host_order: int
    escape: bool

    @property
    def order(self) -> int:
        return len(self.branch)

    def used_vertices(self) -> tuple[int, ...]:
        used = set(self.branch)
        for path in self.paths.values():
            used.update(path)
        return tuple(sorted(used))

    def path_edges(self) -> tuple[tuple[int, int], ...]:
        out = set()
        for path in self.paths.values():
            for a, b in zip(path, path[1:]):
                out.add(edge_key(a, b))
        return tuple(sorted(out))


def _color(cg: ColoredGraph, a: int, b: int) -> str:
    return cg.color_of(a, b)


def rb_topological_clique(cg: ColoredGraph, t: int) -> TopologicalModel:
    """Build an RB-bipartite topological K_t in a 2-coloured complete host.

    Raises HostTooSmall below 2t + 2 + C(t+1, 2) vertices; above it the
    construction is total, using at most 1 + C(t+1, 2) vertices.
    """
    if t < 1:
        raise ValueError("t must be positive")
    n = cg.graph.vertex_count
    if len(cg.graph.edges) != comb(n, 2):
        raise ValueError("host must be a complete graph")
    need = required_host_order(t)
    if n < need:
        raise HostTooSmall(f"{n} vertices; need {need} for t={t}")

    branch: list[int] = [0]
    side: dict[int, int] = {0: 0}
    free = set(range(1, n))
    paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def record(a: int, b: int, path: tuple[int, ...]) -> None:
        if a > b:
            a, b = b, a
            path = tuple(reversed(path))
        paths[(a, b)] = path

    for _ in range(1, t):
        w = min(free)
        free.discard(w)
        keep0 = sum(
            1
            for v in branch
            if (_color(cg, w, v) == RED) == (0 != side[v])
        )
        sw = 0 if 2 * keep0 >= len(branch) else 1
        side[w] = sw
        missing = []
        for v in branch:
            if (_color(cg, w, v) == RED) == (sw != side[v]):
                record(w, v, (w, v))
            else:
                missing.append(v)
        for v in missing:
            # a path between equal sides must use an even number of Red
            # edges; swapping every colour at w turns that into the R-odd
            # search and the swap undoes itself once the path is found
            search = swap_colors_at(cg, w) if sw == side[v] else cg
            outcome = _odd_patch(search, w, v, sorted(free))
            if outcome is None:
                return _escape_clique(cg, t, sorted(free), n)
            prev, cur = w, sw
            for u in outcome[1:-1]:
                cur ^= 1 if _color(cg, prev, u) == RED else 0
                side[u] = cur
                free.discard(u)
                prev = u
            cur ^= 1 if _color(cg, prev, v) == RED else 0
            if cur != side[v]:
                raise AssertionError("patch parity does not match placement")
            record(w, v, outcome)
        branch.append(w)
    return TopologicalModel(
        tuple(branch), paths, side, n, escape=False
    )


def swap_colors_at(cg: ColoredGraph, w: int) -> ColoredGraph:
    """Involution that flips the colour of every edge incident to w."""
    at_w = frozenset(e for e in cg.graph.edges if w in e)
    return ColoredGraph(cg.graph, cg.red ^ at_w)


def _odd_patch(
    cg: ColoredGraph, w: int, v: int, pool: list[int]
) -> tuple[int, ...] | None:
    """R-odd w-to-v path through one or two fresh vertices, if any.

    Scans single internals, then ordered pairs, both in increasing order.
    When this returns None every pool vertex is joined to w and v by
    equal colours, each colour class is internally Blue, and the classes
    are completely Red-joined, so the pool is a complete RB-bipartite
    graph; callers can take a clique from it directly.
    """

    def reds(*pairs: tuple[int, int]) -> int:
        return sum(1 for a, b in pairs if _color(cg, a, b) == RED)

    for u in pool:
        if reds((w, u), (u, v)) % 2 == 1:
            return (w, u, v)
    for x in pool:
        for y in pool:
            if y == x:
                continue
            if reds((w, x), (x, y), (y, v)) % 2 == 1:
                return (w, x, y, v)
    return None


def _escape_clique(
    cg: ColoredGraph, t: int, pool: list[int], host_order: int
) -> TopologicalModel:
    """Patching failed, so the free vertices form a complete RB-bipartite
    graph; its first t vertices are a direct clique."""
    if len(pool) < t:
        raise AssertionError("escape fired with too few free vertices")
    chosen = pool[:t]
    anchor = chosen[0]
    side = {anchor: 0}
    for u in chosen[1:]:
        side[u] = 1 if _color(cg, anchor, u) == RED else 0
    paths = {}
    for i in range(t):
        for j in range(i + 1, t):
            a, b = chosen[i], chosen[j]
            if (_color(cg, a, b) == RED) != (side[a] != side[b]):
                raise AssertionError("free pool was not RB-bipartite")
            paths[(a, b)] = (a, b)
    return TopologicalModel(tuple(chosen), paths, side, host_order, escape=True)


def validate_topological_model(
    cg: ColoredGraph, model: TopologicalModel, t: int, cap: int | None = None
) -> tuple[ColoredGraph, int]:
    """Check a built clique: one path per pair with matching endpoints,
    internals fresh and pairwise disjoint, every edge present and kept
    (Red crossing, Blue within), and the union certified RB-bipartite.
    Returns the union subgraph and the number of vertices used."""
    if len(model.branch) != t or len(set(model.branch)) != t:
        raise ValueError("branch vertices must be t distinct vertices")
    branch_set = set(model.branch)
    want_keys = {
        edge_key(a, b)
        for i, a in enumerate(model.branch)
        for b in model.branch[i + 1 :]
    }
    if set(model.paths) != want_keys:
        raise ValueError("exactly one path per branch pair required")
    seen_internal: set[int] = set()
    edges = []
    for (a, b), path in model.paths.items():
        if path[0] != a or path[-1] != b or len(path) < 2:
            raise ValueError(f"path for ({a}, {b}) has wrong endpoints")
        inner = path[1:-1]
        for u in inner:
            if u in branch_set or u in seen_internal:
                raise ValueError(f"vertex {u} reused across paths")
        seen_internal.update(inner)
        for u, v in zip(path, path[1:]):
            if not cg.graph.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not a host edge")
            color = cg.color_of(u, v)
            if model.side[u] is None or model.side[v] is None:
                raise ValueError("unplaced path vertex")
            if (color == RED) != (model.side[u] != model.side[v]):
                raise ValueError(f"edge ({u}, {v}) breaks the side rule")
            edges.append((u, v, color))
    used = len(branch_set | seen_internal)
    if cap is not None and used > cap:
        raise ValueError(f"{used} vertices used, cap {cap}")
    union = ColoredGraph.from_edge_colors(cg.graph.vertex_count, edges)
    cert = rb_certify(union)
    if not isinstance(cert, RBBipartition):
        raise ValueError("union subgraph is not RB-bipartite")
    return union, used


__all__ = [
    "required_host_order",
    "budget_cap",
    "TopologicalModel",
    "swap_colors_at",
    "rb_topological_clique",
    "validate_topological_model",
]
