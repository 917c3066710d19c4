"""Plain and two-edge-coloured simple graphs with value semantics.

Vertices are 0..vertex_count-1.  Edges are normalised pairs (u, v) with
u < v.  Graphs are immutable; every operation that "changes" a graph
returns a new one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InstanceTooLarge
from .kernels import all_simple_cycles

RED = "R"
BLUE = "B"

Edge = tuple[int, int]

CYCLE_ENUM_CAP = 16


def edge_key(u: int, v: int) -> Edge:
    """Normalise an unordered vertex pair."""
    return (u, v) if u < v else (v, u)


def _validate_edge(u: int, v: int, n: int) -> None:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        for u, v in self.edges:
            _validate_edge(u, v, self.vertex_count)
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalised")

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, normalising pairs and rejecting loops/duplicates."""
        seen: set[Edge] = set()
        for u, v in pairs:
            _validate_edge(u, v, vertex_count)
            e = edge_key(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(vertex_count, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, frozenset())

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def with_edges(self, pairs: Iterable[Sequence[int]]) -> Graph:
        """New graph with extra edges added (duplicates tolerated)."""
        extra = {edge_key(u, v) for u, v in pairs}
        for u, v in extra:
            _validate_edge(u, v, self.vertex_count)
        return Graph(self.vertex_count, self.edges | extra)

    def spanning_subgraph(self, keep: Iterable[Sequence[int]]) -> Graph:
        """Same vertex set, keeping only the listed edges."""
        kept = {edge_key(u, v) for u, v in keep}
        missing = kept - self.edges
        if missing:
            raise ValueError(f"edges not in graph: {sorted(missing)}")
        return Graph(self.vertex_count, frozenset(kept))

    def is_connected_subset(self, vertices: Iterable[int]) -> bool:
        """Whether the induced subgraph on `vertices` is connected."""
        vs = set(vertices)
        if not vs:
            return False
        start = min(vs)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y in vs and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen == vs


@dataclass(frozen=True)
class ColoredGraph:
    """A simple graph plus a total Red/Blue edge colouring."""

    graph: Graph
    red: frozenset[Edge]

    def __post_init__(self) -> None:
        if not self.red <= self.graph.edges:
            raise ValueError("red set contains non-edges")

    @classmethod
    def from_edge_colors(
        cls, vertex_count: int, triples: Iterable[Sequence[object]]
    ) -> ColoredGraph:
        pairs = []
        red = set()
        for u, v, color in triples:
            pairs.append((u, v))
            if color == RED:
                red.add(edge_key(int(u), int(v)))  # type: ignore[arg-type]
            elif color != BLUE:
                raise ValueError(f"unknown colour {color!r}")
        g = Graph.from_edges(vertex_count, pairs)
        return cls(g, frozenset(red))

    @classmethod
    def monochromatic(cls, g: Graph, color: str) -> ColoredGraph:
        if color == RED:
            return cls(g, g.edges)
        if color == BLUE:
            return cls(g, frozenset())
        raise ValueError(f"unknown colour {color!r}")

    @property
    def blue(self) -> frozenset[Edge]:
        return self.graph.edges - self.red

    @property
    def red_count(self) -> int:
        return len(self.red)

    @property
    def blue_count(self) -> int:
        return self.graph.edge_count - len(self.red)

    def color_of(self, u: int, v: int) -> str:
        e = edge_key(u, v)
        if e not in self.graph.edges:
            raise KeyError(f"no edge {e}")
        return RED if e in self.red else BLUE

    def is_red(self, u: int, v: int) -> bool:
        return self.color_of(u, v) == RED

    @cached_property
    def red_masks(self) -> tuple[int, ...]:
        masks = [0] * self.graph.vertex_count
        for u, v in self.red:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def colored_edges(self) -> Iterator[tuple[int, int, str]]:
        for u, v in self.graph.sorted_edges:
            yield u, v, RED if (u, v) in self.red else BLUE

    def induced_on(self, vertices: Iterable[int]) -> ColoredGraph:
        """Same vertex range, keeping only edges inside `vertices`."""
        vs = set(vertices)
        kept = frozenset(e for e in self.graph.edges if e[0] in vs and e[1] in vs)
        return ColoredGraph(Graph(self.graph.vertex_count, kept), self.red & kept)

    def with_colored_edges(
        self, triples: Iterable[tuple[int, int, str]]
    ) -> ColoredGraph:
        """New coloured graph with extra edges; recolouring an edge is an error."""
        new_edges = set(self.graph.edges)
        new_red = set(self.red)
        for u, v, color in triples:
            e = edge_key(u, v)
            if e in new_edges:
                old = RED if e in new_red else BLUE
                if old != color:
                    raise ValueError(f"edge {e} already coloured {old}")
                continue
            _validate_edge(u, v, self.graph.vertex_count)
            new_edges.add(e)
            if color == RED:
                new_red.add(e)
            elif color != BLUE:
                raise ValueError(f"unknown colour {color!r}")
        return ColoredGraph(Graph(self.graph.vertex_count, frozenset(new_edges)),
                            frozenset(new_red))

    def swap_colors(self) -> ColoredGraph:
        return ColoredGraph(self.graph, self.graph.edges - self.red)


X_SIDE = 0
Y_SIDE = 1
SIDE_NAMES = ("X", "Y")


@dataclass(frozen=True, eq=True)
class Bipartition:
    """Two-sided vertex assignment; side 0 is X/left, side 1 is Y/right."""

    side: dict[int, int]

    def __post_init__(self) -> None:
        for v, s in self.side.items():
            if s not in (0, 1):
                raise ValueError(f"side of {v} must be 0 or 1")

    def __contains__(self, v: int) -> bool:
        return v in self.side

    def crossing(self, u: int, v: int) -> bool:
        return self.side[u] != self.side[v]

    def left(self) -> tuple[int, ...]:
        return tuple(sorted(v for v, s in self.side.items() if s == 0))

    def right(self) -> tuple[int, ...]:
        return tuple(sorted(v for v, s in self.side.items() if s == 1))

    def extended(self, v: int, s: int) -> Bipartition:
        if v in self.side:
            raise ValueError(f"vertex {v} already placed")
        new = dict(self.side)
        new[v] = s
        return type(self)(new)

    def is_valid_for(self, g: Graph) -> bool:
        """All vertices covered and every edge crossing."""
        if set(self.side) != set(range(g.vertex_count)):
            return False
        return all(self.side[u] != self.side[v] for u, v in g.edges)


@dataclass(frozen=True)
class OddCycle:
    """A simple cycle of odd length, implicit closing edge last->first."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3 or len(self.vertices) % 2 == 0:
            raise ValueError("odd cycle needs odd length >= 3")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid_for(self, g: Graph) -> bool:
        k = len(self.vertices)
        return all(
            g.has_edge(self.vertices[i], self.vertices[(i + 1) % k])
            for i in range(k)
        )


def is_bipartite(g: Graph) -> Bipartition | OddCycle:
    """2-colour by BFS; the failure witness is an odd cycle through a BFS tree.

    Deterministic: components are rooted at their smallest vertex and
    neighbours are scanned in increasing order.
    """
    side: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in range(g.vertex_count):
        if root in side:
            continue
        side[root] = 0
        parent[root] = -1
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(g.adjacency[u]):
                if v not in side:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return OddCycle(_tree_cycle(u, v, parent, depth))
    return Bipartition(side)


def _tree_cycle(u: int, v: int, parent: dict[int, int], depth: dict[int, int]) -> tuple[int, ...]:
    """Cycle formed by tree paths u->lca, lca->v plus the edge (v, u)."""
    up: list[int] = []
    down: list[int] = []
    a, b = u, v
    while depth[a] > depth[b]:
        up.append(a)
        a = parent[a]
    while depth[b] > depth[a]:
        down.append(b)
        b = parent[b]
    while a != b:
        up.append(a)
        down.append(b)
        a = parent[a]
        b = parent[b]
    up.append(a)
    return tuple(up + down[::-1])


def subdivide_blue_once(cg: ColoredGraph) -> Graph:
    """Replace each Blue edge by a two-edge path through a fresh vertex.

    Fresh vertices are numbered n, n+1, ... following the sorted order of
    the Blue edges, so the output is reproducible.
    """
    n = cg.graph.vertex_count
    edges: list[tuple[int, int]] = [e for e in cg.graph.sorted_edges if e in cg.red]
    next_id = n
    for u, v in sorted(cg.blue):
        edges.append((u, next_id))
        edges.append((v, next_id))
        next_id += 1
    return Graph.from_edges(next_id, edges)


def enumerate_cycles(g: Graph, max_vertices: int = CYCLE_ENUM_CAP) -> list[tuple[int, ...]]:
    """All simple cycles, each once up to rotation and reflection.

    Cycles come back as vertex tuples starting at their smallest vertex,
    oriented toward the smaller neighbour, sorted by (length, sequence).
    Refuses graphs larger than min(max_vertices, 16).
    """
    cap = min(max_vertices, CYCLE_ENUM_CAP)
    if g.vertex_count > cap:
        raise InstanceTooLarge(
            f"{g.vertex_count} vertices exceeds cycle-enumeration cap {cap}"
        )
    cycles = all_simple_cycles(g.vertex_count, list(g.adjacency_masks))
    return sorted(cycles, key=lambda c: (len(c), c))
