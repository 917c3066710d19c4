"""Red/blue parity certificates and the half-edge extractor.

A coloured graph is RB-bipartite when its vertices split into sides (X, Y)
with every Red edge crossing and every Blue edge inside a side;
equivalently, no closed walk traverses an odd number of Red edges.
`rb_certify` decides this in near-linear time and always hands back a
checkable witness for its answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import ceil
from typing import Sequence

from .graphs import RED, Bipartition, ColoredGraph, edge_key


@dataclass(frozen=True, eq=True)
class RBBipartition(Bipartition):
    """Sides (X, Y): valid when Red edges cross and Blue edges stay inside."""

    def is_valid_for(self, cg: ColoredGraph) -> bool:  # type: ignore[override]
        if set(self.side) != set(range(cg.graph.vertex_count)):
            return False
        return self.is_valid_on_edges(cg)

    def is_valid_on_edges(self, cg: ColoredGraph) -> bool:
        """Edge conditions only; the domain may exceed or subset the graph."""
        for u, v in cg.graph.edges:
            if u not in self.side or v not in self.side:
                return False
            crossing = self.side[u] != self.side[v]
            if crossing != ((u, v) in cg.red):
                return False
        return True


@dataclass(frozen=True)
class ROddCertificate:
    """Closed walk with an odd number of Red traversals.

    The walk is explicit: walk[0] == walk[-1], consecutive entries are
    edges.  Its existence refutes every candidate (X, Y) split at once.
    """

    walk: tuple[int, ...]
    red_count: int

    def __post_init__(self) -> None:
        if len(self.walk) < 4 or self.walk[0] != self.walk[-1]:
            raise ValueError("walk must be closed with at least 3 edges")
        if self.red_count % 2 == 0:
            raise ValueError("red traversal count must be odd")

    @property
    def length(self) -> int:
        return len(self.walk) - 1

    def is_valid_for(self, cg: ColoredGraph) -> bool:
        reds = 0
        for a, b in zip(self.walk, self.walk[1:]):
            if not cg.graph.has_edge(a, b):
                return False
            if cg.is_red(a, b):
                reds += 1
        return reds == self.red_count and reds % 2 == 1


def rb_certify(cg: ColoredGraph) -> RBBipartition | ROddCertificate:
    """Decide RB-bipartiteness with a witness either way.

    Parity union-find over the edges in sorted order: a Red edge constrains
    its endpoints to opposite sides, a Blue edge to the same side.  The
    first contradictory edge closes an R-odd cycle through the union-find
    forest.  Deterministic for a given input.
    """
    n = cg.graph.vertex_count
    parent = list(range(n))
    rank = [0] * n
    parity = [0] * n  # parity of the path to parent

    def find(x: int) -> tuple[int, int]:
        start = x
        p = 0
        root = x
        while parent[root] != root:
            p ^= parity[root]
            root = parent[root]
        # path compression, keeping parities consistent
        while parent[x] != root:
            nxt = parent[x]
            nxt_p = parity[x]
            parent[x] = root
            parity[x] = p
            p ^= nxt_p
            x = nxt
        return root, 0 if start == root else parity[start]

    forest: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v in cg.graph.sorted_edges:
        w = 1 if (u, v) in cg.red else 0
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if pu ^ pv != w:
                return _odd_walk(cg, forest, u, v)
            continue
        if rank[ru] < rank[rv]:
            ru, rv = rv, ru
            pu, pv = pv, pu
        parent[rv] = ru
        parity[rv] = pu ^ pv ^ w
        if rank[ru] == rank[rv]:
            rank[ru] += 1
        forest[u].append((v, w))
        forest[v].append((u, w))
    side = {}
    for v in range(n):
        _, p = find(v)
        side[v] = p
    return RBBipartition(side)


def _odd_walk(
    cg: ColoredGraph, forest: list[list[tuple[int, int]]], u: int, v: int
) -> ROddCertificate:
    # BFS through the union-find forest from u to v, then close with (v, u).
    prev: dict[int, int] = {u: u}
    queue = deque([u])
    while queue and v not in prev:
        x = queue.popleft()
        for y, _ in forest[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])
    path.reverse()  # u ... v
    walk = tuple(path) + (u,)
    reds = sum(1 for a, b in zip(walk, walk[1:]) if cg.is_red(a, b))
    return ROddCertificate(walk, reds)


def rb_extract_half(
    cg: ColoredGraph, order: Sequence[int]
) -> tuple[ColoredGraph, RBBipartition]:
    """Keep >= half the edges as an RB-bipartite subgraph, derandomised.

    Each vertex in `order` goes to the side that resolves the larger
    signed gain (Red crossing counts +1, Blue crossing -1) against the
    vertices already placed; ties go to X.  Every edge is kept on exactly
    one of the two choices for its later endpoint, so the conditional
    expectation never drops: the kept count is >= ceil(e/2) and the signed
    crossing difference d(X,Y) is >= (red - blue)/2.

    `order` may be any duplicate-free vertex sequence; a full permutation
    is the classic statement, a subsequence applies it to the induced
    subgraph.
    """
    seen = set(order)
    if len(seen) != len(order):
        raise ValueError("order contains duplicates")
    for v in order:
        if not 0 <= v < cg.graph.vertex_count:
            raise ValueError(f"vertex {v} out of range")
    side: dict[int, int] = {}
    for w in order:
        gain_x = 0  # signed d-gain if w goes to X
        gain_y = 0
        for u in cg.graph.adjacency[w]:
            if u not in side:
                continue
            red = (edge_key(u, w) in cg.red)
            sign = 1 if red else -1
            if side[u] == 1:
                gain_x += sign  # u in Y: placing w in X makes it crossing
            else:
                gain_y += sign
        side[w] = 0 if gain_x >= gain_y else 1
    kept = []
    for u, v, c in cg.colored_edges():
        if u not in side or v not in side:
            continue
        crossing = side[u] != side[v]
        if crossing == (c == RED):
            kept.append((u, v, c))
    sub = ColoredGraph.from_edge_colors(cg.graph.vertex_count, kept)
    return sub, RBBipartition(side)


def extraction_stats(
    cg: ColoredGraph, sub: ColoredGraph, partition: RBBipartition
) -> dict[str, int]:
    """Kept-edge and signed-crossing tallies for the extractor's contract."""
    placed = set(partition.side)
    total = red = blue = 0
    for u, v in cg.graph.edges:
        if u in placed and v in placed:
            total += 1
            if (u, v) in cg.red:
                red += 1
            else:
                blue += 1
    d_value = 0
    for u, v in cg.graph.edges:
        if u in placed and v in placed and partition.crossing(u, v):
            d_value += 1 if (u, v) in cg.red else -1
    return {
        "total_edges": total,
        "red_edges": red,
        "blue_edges": blue,
        "kept_edges": sub.graph.edge_count,
        "kept_bound": ceil(total / 2),
        "d_value": d_value,
        # contract: 2*d_value >= red - blue, kept_edges >= kept_bound
    }


def rb_add_vertex(
    cg: ColoredGraph,
    partition: RBBipartition,
    w: int,
    incident: Sequence[tuple[int, str]],
) -> tuple[int, list[tuple[int, str]]]:
    """Place a fresh vertex on the side keeping more incident edges.

    An edge survives when its colour matches the side relation (Red
    crossing, Blue inside).  Returns the chosen side and the kept edges;
    at least half survive since each edge is keepable on exactly one side.
    """
    if w in partition.side:
        raise ValueError(f"vertex {w} already placed")
    keep_x: list[tuple[int, str]] = []
    keep_y: list[tuple[int, str]] = []
    for u, color in incident:
        if u not in partition.side:
            raise ValueError(f"neighbour {u} not placed")
        opposite = 1 - partition.side[u]
        # Red wants w opposite u, Blue wants w alongside u
        want = opposite if color == RED else partition.side[u]
        (keep_x if want == 0 else keep_y).append((u, color))
    side = 0 if len(keep_x) >= len(keep_y) else 1
    return side, (keep_x if side == 0 else keep_y)
