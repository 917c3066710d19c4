"""Minor models, minimisation, and the two-coloured auxiliary graph.

A model assigns disjoint connected host parts, pairwise joined by at least
one edge.  Minimising prunes each part to a spanning tree and each pair to
a single cross edge, after which the root-to-root path between two parts
is unique ("canonical").  The auxiliary graph records, for every pair, the
parity of that path: Red for odd length, Blue for even.  Odd cycles in any
partial lift correspond to red-odd circuits in the auxiliary graph and
vice versa; both directions are implemented below.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import NotAModel, NotInLift
from .graphs import BLUE, RED, ColoredGraph, Graph, edge_key


@dataclass(frozen=True)
class MinorModel:
    host: Graph
    parts: tuple[tuple[int, ...], ...]
    roots: tuple[int, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        if not self.parts:
            raise ValueError("model needs at least one part")
        if len(self.parts) != len(self.roots):
            raise ValueError("one root per part required")
        for part, root in zip(self.parts, self.roots):
            if not part:
                raise ValueError("empty part")
            if list(part) != sorted(set(part)):
                raise ValueError("parts must be sorted and duplicate-free")
            for v in part:
                if not 0 <= v < self.host.vertex_count:
                    raise ValueError(f"part vertex {v} out of range")
                if v in seen:
                    raise ValueError(f"vertex {v} in two parts")
                seen.add(v)
            if root not in part:
                raise ValueError(f"root {root} outside its part")

    @classmethod
    def create(
        cls,
        host: Graph,
        parts: Iterable[Iterable[int]],
        roots: Sequence[int] | None = None,
    ) -> MinorModel:
        norm = tuple(tuple(sorted(set(p))) for p in parts)
        if roots is None:
            roots = tuple(p[0] for p in norm)  # smallest vertex of each part
        return cls(host, norm, tuple(roots))

    @property
    def order(self) -> int:
        return len(self.parts)

    def part_of(self) -> dict[int, int]:
        where: dict[int, int] = {}
        for i, part in enumerate(self.parts):
            for v in part:
                where[v] = i
        return where

    def validate(self) -> None:
        """Connectivity and pairwise adjacency; raises NotAModel."""
        for i, part in enumerate(self.parts):
            if not self.host.is_connected_subset(part):
                raise NotAModel(f"part {i} is not connected in the host")
        sets = [set(p) for p in self.parts]
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if not _pair_edges(self.host, sets[i], sets[j]):
                    raise NotAModel(f"parts {i} and {j} share no edge")

    def cross_edges(self, i: int, j: int) -> list[tuple[int, int]]:
        return _pair_edges(self.host, set(self.parts[i]), set(self.parts[j]))


def _pair_edges(host: Graph, a: set[int], b: set[int]) -> list[tuple[int, int]]:
    found = []
    for u, v in host.edges:
        if (u in a and v in b) or (u in b and v in a):
            found.append((u, v))
    return sorted(found)


def _part_tree_edges(host: Graph, part: Sequence[int], root: int) -> list[tuple[int, int]]:
    """BFS spanning tree of the induced part, neighbours in increasing order."""
    inside = set(part)
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        x = queue.popleft()
        for y in sorted(host.adjacency[x]):
            if y in inside and y not in seen:
                seen.add(y)
                queue.append(y)
                tree.append(edge_key(x, y))
    if seen != inside:
        raise NotAModel("part is not connected in the host")
    return tree


def _minimize_with_map(
    host: Graph, model: MinorModel
) -> tuple[Graph, MinorModel, list[int]]:
    if model.host != host:
        raise ValueError("model was built over a different host")
    model.validate()
    kept: list[tuple[int, int]] = []
    for part, root in zip(model.parts, model.roots):
        kept.extend(_part_tree_edges(host, part, root))
    k = len(model.parts)
    for i in range(k):
        for j in range(i + 1, k):
            kept.append(model.cross_edges(i, j)[0])  # lex-smallest survivor
    old_of_new = sorted(v for part in model.parts for v in part)
    relabel = {old: new for new, old in enumerate(old_of_new)}
    new_host = Graph.from_edges(
        len(old_of_new), [(relabel[u], relabel[v]) for u, v in kept]
    )
    new_model = MinorModel.create(
        new_host,
        [tuple(relabel[v] for v in part) for part in model.parts],
        [relabel[r] for r in model.roots],
    )
    return new_host, new_model, old_of_new


def minimize_model(host: Graph, model: MinorModel) -> tuple[Graph, MinorModel]:
    """Prune to part spanning trees and one cross edge per pair.

    Vertices outside every part are dropped and the survivors relabelled
    densely (0..k-1) in increasing old-label order.  The lex-smallest cross
    edge of each pair survives; roots carry over.
    """
    new_host, new_model, _ = _minimize_with_map(host, model)
    return new_host, new_model


def canonical_path(model: MinorModel, i: int, j: int) -> tuple[int, ...]:
    """Unique root-to-root path inside parts i and j of a minimised model."""
    if i == j:
        raise ValueError("distinct parts required")
    inside = set(model.parts[i]) | set(model.parts[j])
    start, goal = model.roots[i], model.roots[j]
    prev: dict[int, int] = {start: start}
    queue = deque([start])
    while queue and goal not in prev:
        x = queue.popleft()
        for y in sorted(model.host.adjacency[x]):
            if y in inside and y not in prev:
                prev[y] = x
                queue.append(y)
    if goal not in prev:
        raise NotAModel(f"no path between roots of parts {i} and {j}")
    path = [goal]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Complete two-coloured graph on part indices plus the path table.

    Edge (i, j) is Red exactly when the canonical path between roots i and
    j has odd length.  path_table maps (i, j) with i < j to the path
    oriented from root i to root j.
    """

    colored: ColoredGraph
    path_table: Mapping[tuple[int, int], tuple[int, ...]]

    def path(self, i: int, j: int) -> tuple[int, ...]:
        if i < j:
            return self.path_table[(i, j)]
        return tuple(reversed(self.path_table[(j, i)]))

    @property
    def order(self) -> int:
        return self.colored.graph.vertex_count


def _check_minimized(model: MinorModel) -> None:
    part_sets = [set(p) for p in model.parts]
    covered = set().union(*part_sets) if part_sets else set()
    if covered != set(range(model.host.vertex_count)):
        raise NotAModel("minimised model must cover every host vertex")
    for i, part in enumerate(model.parts):
        internal = sum(
            1 for u, v in model.host.edges if u in part_sets[i] and v in part_sets[i]
        )
        if internal != len(part) - 1:
            raise NotAModel(f"part {i} does not induce a tree")
        if not model.host.is_connected_subset(part):
            raise NotAModel(f"part {i} is not connected")
    for i in range(len(part_sets)):
        for j in range(i + 1, len(part_sets)):
            if len(_pair_edges(model.host, part_sets[i], part_sets[j])) != 1:
                raise NotAModel(f"parts {i}, {j} need exactly one cross edge")


def build_auxiliary(model: MinorModel) -> AuxiliaryGraph:
    """Colour every part pair by the parity of its canonical path."""
    _check_minimized(model)
    k = model.order
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    triples = []
    for i in range(k):
        for j in range(i + 1, k):
            path = canonical_path(model, i, j)
            table[(i, j)] = path
            length = len(path) - 1
            triples.append((i, j, RED if length % 2 == 1 else BLUE))
    return AuxiliaryGraph(ColoredGraph.from_edge_colors(k, triples), table)


def _cross_edge(model: MinorModel, i: int, j: int) -> tuple[int, int]:
    edges = model.cross_edges(i, j)
    if len(edges) != 1:
        raise NotAModel(f"parts {i}, {j} need exactly one cross edge")
    return edges[0]


def lift_subgraph(
    model: MinorModel, aux: AuxiliaryGraph, sub: Iterable[tuple[int, int]]
) -> Graph:
    """Host subgraph: all part trees plus the cross edge of each pair in sub."""
    if aux.order != model.order:
        raise ValueError("auxiliary graph does not match the model")
    edges: list[tuple[int, int]] = []
    part_sets = [set(p) for p in model.parts]
    for s in part_sets:
        edges.extend(e for e in model.host.edges if e[0] in s and e[1] in s)
    seen_pairs = set()
    for i, j in sub:
        a, b = min(i, j), max(i, j)
        if not 0 <= a < b < model.order:
            raise ValueError(f"bad part pair ({i}, {j})")
        if (a, b) in seen_pairs:
            continue
        seen_pairs.add((a, b))
        edges.append(_cross_edge(model, a, b))
    return Graph.from_edges(model.host.vertex_count, edges)


def lift_odd_circuit(
    model: MinorModel, aux: AuxiliaryGraph, circuit: Sequence[int]
) -> tuple[int, ...]:
    """Concatenate canonical paths along a red-odd circuit of part indices.

    `circuit` is an explicit closed walk (first == last) in the auxiliary
    graph with an odd number of Red traversals.  The output is a closed
    host walk of odd length.
    """
    if len(circuit) < 4 or circuit[0] != circuit[-1]:
        raise ValueError("circuit must be closed with at least 3 edges")
    reds = 0
    for a, b in zip(circuit, circuit[1:]):
        if a == b or not 0 <= a < model.order or not 0 <= b < model.order:
            raise ValueError(f"bad circuit step ({a}, {b})")
        if aux.colored.is_red(a, b):
            reds += 1
    if reds % 2 == 0:
        raise ValueError("circuit has an even number of Red traversals")
    walk: list[int] = [model.roots[circuit[0]]]
    for a, b in zip(circuit, circuit[1:]):
        walk.extend(aux.path(a, b)[1:])
    return tuple(walk)


def project_odd_cycle(
    model: MinorModel,
    aux: AuxiliaryGraph,
    cycle: Sequence[int],
    sub: Iterable[tuple[int, int]] | None = None,
) -> tuple[int, ...]:
    """Collapse an odd host cycle (from a lift) to a red-odd part circuit.

    `cycle` lists distinct host vertices with an implicit closing edge.
    Consecutive same-part runs collapse to single part indices; the result
    is an explicit closed circuit whose Red-traversal count is odd.  When
    `sub` is given, cross edges outside it raise NotInLift.
    """
    if len(cycle) < 3 or len(cycle) % 2 == 0:
        raise ValueError("cycle must have odd length >= 3")
    if len(set(cycle)) != len(cycle):
        raise ValueError("cycle vertices must be distinct")
    allowed_pairs = None
    if sub is not None:
        allowed_pairs = {(min(i, j), max(i, j)) for i, j in sub}
    where = model.part_of()
    seq: list[int] = []
    k = len(cycle)
    for idx in range(k):
        u, v = cycle[idx], cycle[(idx + 1) % k]
        if not model.host.has_edge(u, v):
            raise NotInLift(f"({u}, {v}) is not a host edge")
        if u not in where or v not in where:
            raise NotInLift("cycle leaves the model's parts")
        pu, pv = where[u], where[v]
        if pu != pv and allowed_pairs is not None:
            if (min(pu, pv), max(pu, pv)) not in allowed_pairs:
                raise NotInLift(
                    f"cross edge between parts {pu} and {pv} is outside sub"
                )
        if not seq or seq[-1] != pu:
            seq.append(pu)
    while len(seq) > 1 and seq[0] == seq[-1]:
        seq.pop()
    if len(seq) < 3:
        raise NotInLift("cycle stays within two parts; no lift contains it")
    circuit = tuple(seq) + (seq[0],)
    reds = sum(
        1 for a, b in zip(circuit, circuit[1:]) if aux.colored.is_red(a, b)
    )
    if reds % 2 == 0:
        raise ValueError("projection yielded an even circuit; cycle not from a lift")
    return circuit
