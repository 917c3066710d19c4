"""From a clique minor to a bipartite clique minor.

The pipeline minimises the input model, colours the auxiliary graph,
extracts a large RB-bipartite subgraph of the active part, finds a
pairwise-joined vertex partition there, and then spends reserved
auxiliary vertices to restore connectivity: projector vertices give every
part member a neighbour, connector paths chain the projectors together.
Everything stays RB-bipartite, so the lifted host subgraph is bipartite.

Reserve accounting is adaptive: the planner tries the largest part count
first and retreats one step whenever the reserve runs dry, so the result
is always a valid model, just possibly smaller than the connectivity-free
optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Mapping, Sequence

from .errors import BudgetExhausted, InstanceTooLarge, PoolExhausted
from .graphs import (
    RED,
    Bipartition,
    ColoredGraph,
    Graph,
    edge_key,
    is_bipartite,
)
from .kernels import find_compatible, find_kt_model
from .models import AuxiliaryGraph, MinorModel, _minimize_with_map, build_auxiliary
from .rb import RBBipartition, rb_extract_half

EXACT_PARTITION_CAP = 12


@dataclass(frozen=True)
class CompatiblePartition:
    """Disjoint vertex subsets, pairwise joined by an edge.

    This is a clique minor shorn of the connectivity condition; parts may
    be scattered.
    """

    parts: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.parts)

    def is_valid_for(self, g: Graph) -> bool:
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                return False
            for v in part:
                if v in seen or not 0 <= v < g.vertex_count:
                    return False
                seen.add(v)
        for i in range(len(self.parts)):
            for j in range(i + 1, len(self.parts)):
                if not any(
                    g.has_edge(u, v)
                    for u in self.parts[i]
                    for v in self.parts[j]
                ):
                    return False
        return True


def find_compatible_partition(
    g: Graph, m: int, cap: int = EXACT_PARTITION_CAP
) -> CompatiblePartition | None:
    """Exhaustive search for m pairwise-joined disjoint subsets."""
    n = g.vertex_count
    if n > cap:
        raise InstanceTooLarge(f"{n} vertices (cap {cap})")
    if m < 1:
        raise ValueError("m must be positive")
    if m > n:
        return None
    masks = find_compatible(n, list(g.adjacency_masks), m)
    if masks is None:
        return None
    return CompatiblePartition(tuple(_mask_bits(p) for p in masks))


def greedy_compatible_partition(g: Graph) -> CompatiblePartition:
    """Merge non-joined parts until all pairs are joined.

    Starts from singletons (isolated vertices dropped) and repeatedly
    merges the non-adjacent pair whose union sees the most other parts,
    ties broken lexicographically.  No optimality promise; used when the
    graph is too big for the exhaustive search.
    """
    active = [v for v in range(g.vertex_count) if g.degree(v) > 0]
    if not active:
        if g.vertex_count == 0:
            return CompatiblePartition(())
        return CompatiblePartition(((0,),))
    parts = [frozenset((v,)) for v in active]
    nbr = [frozenset(g.adjacency[v]) for v in active]
    while True:
        bad = None
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                if not nbr[i] & parts[j]:
                    score = len((nbr[i] | nbr[j]) - parts[i] - parts[j])
                    if bad is None or score > bad[0]:
                        bad = (score, i, j)
        if bad is None:
            break
        _, i, j = bad
        parts[i] |= parts[j]
        nbr[i] |= nbr[j]
        del parts[j], nbr[j]
    return CompatiblePartition(
        tuple(sorted((tuple(sorted(p)) for p in parts), key=lambda p: p[0]))
    )


def _mask_bits(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _pair_color(colors: Mapping[tuple[int, int], str], a: int, b: int) -> str:
    return colors[edge_key(a, b)]


def _keeps(color: str, side_a: int, side_b: int) -> bool:
    # an edge survives in an RB-bipartite subgraph iff Red edges cross
    # the partition and Blue edges do not
    return (color == RED) == (side_a != side_b)


def build_projector(
    cg: ColoredGraph,
    partition: RBBipartition,
    members: Sequence[int],
    pool: Sequence[int],
    pool_colors: Mapping[tuple[int, int], str],
) -> tuple[tuple[int, ...], ColoredGraph, RBBipartition]:
    """Give every member a neighbour among freshly placed pool vertices.

    Each pool vertex is put on the side that lets it keep edges to at
    least half of the still-uncovered members (Red kept when crossing,
    Blue when not), so at most floor(log2 k) + 1 vertices are consumed.
    Returns (projector vertices, grown graph, extended partition); raises
    PoolExhausted when the pool runs out first.
    """
    side = dict(partition.side)
    for u in members:
        if u not in side:
            raise ValueError(f"member {u} is not placed")
    queue = list(pool)
    remaining = sorted(members)
    chain: list[int] = []
    cur = cg
    while remaining:
        if not queue:
            raise PoolExhausted(
                f"{len(remaining)} members uncovered and the pool is empty"
            )
        s = queue.pop(0)
        if s in side:
            raise ValueError(f"pool vertex {s} is already placed")
        gain0 = sum(
            1 for u in remaining if _keeps(_pair_color(pool_colors, s, u), 0, side[u])
        )
        placed = 0 if 2 * gain0 >= len(remaining) else 1
        covered = [
            u
            for u in remaining
            if _keeps(_pair_color(pool_colors, s, u), placed, side[u])
        ]
        cur = cur.with_colored_edges(
            [(s, u, _pair_color(pool_colors, s, u)) for u in covered]
        )
        side[s] = placed
        chain.append(s)
        remaining = [u for u in remaining if u not in covered]
    return tuple(chain), cur, RBBipartition(side)


@dataclass(frozen=True)
class ConnectorPath:
    """x-to-y path through one or two pool vertices, plus the grown graph
    and the partition extended over the internals."""

    path: tuple[int, ...]
    graph: ColoredGraph
    partition: RBBipartition

    @property
    def internals(self) -> tuple[int, ...]:
        return self.path[1:-1]


@dataclass(frozen=True)
class RBCliqueWitness:
    """The pool itself is a complete RB-bipartite graph: joining failed,
    but the pool forms a bipartite clique minor directly."""

    vertices: tuple[int, ...]
    side: dict[int, int]

    @property
    def order(self) -> int:
        return len(self.vertices)


def connect_pair(
    cg: ColoredGraph,
    partition: RBBipartition,
    x: int,
    y: int,
    parity: str,
    pool: Sequence[int],
    pool_colors: Mapping[tuple[int, int], str],
) -> ConnectorPath | RBCliqueWitness:
    """Join placed x and y through at most two pool vertices.

    Walking x -> internals -> y, each edge forces the next side (Red
    flips, Blue keeps), and the path is usable iff the forced side at y
    matches where y already sits.  If no one- or two-internal path works,
    the pool splits by its colour towards x into classes where every
    failed case forces intra-class Blue and cross-class Red; that makes
    the pool a complete RB-bipartite graph, returned as a witness.

    parity must name the x-to-y Red parity implied by their sides:
    "even" when equal, "odd" when not.
    """
    side = dict(partition.side)
    if x == y:
        raise ValueError("endpoints must differ")
    if x not in side or y not in side:
        raise ValueError("both endpoints must be placed")
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = "even" if side[x] == side[y] else "odd"
    if parity != want:
        raise ValueError(
            f"sides of {x} and {y} force {want!r} Red parity, not {parity!r}"
        )
    order = tuple(sorted(pool))
    for w in order:
        if w in side:
            raise ValueError(f"pool vertex {w} is already placed")

    def forced(prev_side: int, color: str) -> int:
        return prev_side ^ (1 if color == RED else 0)

    def finish(path: tuple[int, ...]) -> ConnectorPath:
        new_side = dict(side)
        cur = side[x]
        edges = []
        for a, b in zip(path, path[1:]):
            color = _pair_color(pool_colors, a, b)
            cur = forced(cur, color)
            if b != y:
                new_side[b] = cur
            edges.append((a, b, color))
        if cur != side[y]:
            raise AssertionError("internal parity error in connector")
        return ConnectorPath(
            path, cg.with_colored_edges(edges), RBBipartition(new_side)
        )

    sx = side[x]
    for w in order:
        s1 = forced(sx, _pair_color(pool_colors, x, w))
        if forced(s1, _pair_color(pool_colors, w, y)) == side[y]:
            return finish((x, w, y))
    for v in order:
        sv = forced(sx, _pair_color(pool_colors, x, v))
        for w in order:
            if w == v:
                continue
            sw = forced(sv, _pair_color(pool_colors, v, w))
            if forced(sw, _pair_color(pool_colors, w, y)) == side[y]:
                return finish((x, v, w, y))
    witness_side = {
        w: 0 if _pair_color(pool_colors, w, x) == RED else 1 for w in order
    }
    return RBCliqueWitness(order, witness_side)


@dataclass(frozen=True)
class PipelineReport:
    """Bipartite clique minor produced by the pipeline, in host labels."""

    m_achieved: int
    parts: tuple[tuple[int, ...], ...]
    roots: tuple[int, ...]
    lift_edges: tuple[tuple[int, int], ...]
    partition_witness: Bipartition
    reserve_size: int
    budget_used: tuple[tuple[str, int], ...]
    from_witness: bool

    def model(self, host: Graph) -> MinorModel:
        return MinorModel.create(host, self.parts, self.roots)

    def budget(self) -> dict[str, int]:
        return dict(self.budget_used)


def _plan_partitions(h1: Graph, active_count: int, m: int) -> tuple[tuple[int, ...], ...] | None:
    masks = [h1.adjacency_masks[v] for v in range(active_count)]
    found = find_kt_model(active_count, masks, m)
    if found is None:
        found = find_compatible(active_count, masks, m)
    if found is None:
        return None
    return tuple(_mask_bits(p) for p in found)


def _greedy_plan(
    h1: Graph, active_count: int, m: int
) -> tuple[tuple[int, ...], ...] | None:
    sub = Graph.from_edges(
        active_count, [e for e in h1.edges if e[1] < active_count]
    )
    full = greedy_compatible_partition(sub)
    if full.order < m:
        return None
    ranked = sorted(
        full.parts,
        key=lambda p: (0 if sub.is_connected_subset(p) else 1, len(p), p[0]),
    )
    return tuple(sorted(ranked[:m], key=lambda p: p[0]))


@dataclass
class _Execution:
    parts: list[tuple[int, ...]]
    projector: dict[int, tuple[int, ...]]
    connector: dict[int, tuple[int, ...]]
    graph: ColoredGraph
    side: dict[int, int]


def _execute_plan(
    plan: tuple[tuple[int, ...], ...],
    h1: ColoredGraph,
    start: RBBipartition,
    reserve: Sequence[int],
    pool_colors: Mapping[tuple[int, int], str],
) -> _Execution | RBCliqueWitness:
    cur = h1
    part_state = RBBipartition(dict(start.side))
    pool = list(reserve)
    projector: dict[int, tuple[int, ...]] = {}
    for idx, members in enumerate(plan):
        if len(members) == 1 or h1.graph.is_connected_subset(members):
            projector[idx] = ()
            continue
        chain, cur, part_state = build_projector(
            cur, part_state, members, pool, pool_colors
        )
        del pool[: len(chain)]
        projector[idx] = chain
    connector: dict[int, tuple[int, ...]] = {}
    for idx in range(len(plan)):
        joints: list[int] = []
        xs = projector[idx]
        for j in range(len(xs) - 1):
            a, b = xs[j], xs[j + 1]
            parity = "even" if part_state.side[a] == part_state.side[b] else "odd"
            res = connect_pair(
                cur, part_state, a, b, parity, tuple(pool), pool_colors
            )
            if isinstance(res, RBCliqueWitness):
                return res
            for w in res.internals:
                pool.remove(w)
                joints.append(w)
            cur = res.graph
            part_state = res.partition
        connector[idx] = tuple(joints)
    return _Execution(list(plan), projector, connector, cur, dict(part_state.side))


def bipartite_minor_pipeline(
    g: Graph, model: MinorModel, epsilon: float = 0.25
) -> PipelineReport:
    """Convert a clique minor of g into a bipartite one.

    Minimises the model, reserves the last ceil(epsilon * n) auxiliary
    vertices (at least 2), extracts an RB-bipartite half of the active
    auxiliary clique, and searches part counts downward: pairwise-joined
    parts first without any reserve spend (connected parts), then with
    projector and connector repair.  A step that exhausts the reserve
    retreats to the next smaller count; a complete RB-bipartite pool
    witness is kept when it beats the planned count.  The report is
    always a valid bipartite minor model in g's own labels.
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    model.validate()
    host_min, model_min, old_of_new = _minimize_with_map(g, model)
    n = model_min.order
    reserve_size = max(ceil(epsilon * n), 2)
    if reserve_size >= n:
        raise BudgetExhausted(
            f"reserving {reserve_size} of {n} auxiliary vertices leaves no active part"
        )
    aux = build_auxiliary(model_min)
    active_count = n - reserve_size
    active = list(range(active_count))
    reserve = list(range(active_count, n))
    pool_colors = {
        edge_key(u, v): aux.colored.color_of(u, v)
        for u in range(n)
        for v in range(u + 1, n)
    }
    h1, start = rb_extract_half(aux.colored.induced_on(active), active)

    best_witness: RBCliqueWitness | None = None
    outcome: _Execution | None = None
    m_final = 0
    for m in range(active_count, 0, -1):
        if best_witness is not None and best_witness.order >= max(m, 2):
            break
        if active_count <= EXACT_PARTITION_CAP:
            plan = _plan_partitions(h1.graph, active_count, m)
        else:
            plan = _greedy_plan(h1.graph, active_count, m)
        if plan is None:
            continue
        try:
            result = _execute_plan(plan, h1, start, reserve, pool_colors)
        except PoolExhausted:
            continue
        if isinstance(result, RBCliqueWitness):
            if best_witness is None or result.order > best_witness.order:
                best_witness = result
            continue
        outcome = result
        m_final = m
        break

    if best_witness is not None and best_witness.order >= max(m_final, 2):
        return _witness_report(
            g, model_min, old_of_new, best_witness, reserve_size
        )
    if outcome is None:
        raise BudgetExhausted("no part count survived the reserve budget")
    return _pipeline_report(
        g, model_min, aux, old_of_new, outcome, h1, reserve_size
    )


def _host_edges_for(
    model_min: MinorModel,
    aux_vertices: Sequence[int],
    aux_edges: Sequence[tuple[int, int]],
) -> list[tuple[int, int]]:
    edges: list[tuple[int, int]] = []
    for i in aux_vertices:
        part = set(model_min.parts[i])
        edges.extend(
            e for e in model_min.host.edges if e[0] in part and e[1] in part
        )
    for i, j in aux_edges:
        edges.append(model_min.cross_edges(i, j)[0])
    return edges


def _relabel(old_of_new: Sequence[int], edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return [edge_key(old_of_new[u], old_of_new[v]) for u, v in edges]


def _finish_report(
    g: Graph,
    model_min: MinorModel,
    old_of_new: Sequence[int],
    groups: Sequence[Sequence[int]],
    aux_edges: Sequence[tuple[int, int]],
    reserve_size: int,
    budget: tuple[tuple[str, int], ...],
    from_witness: bool,
) -> PipelineReport:
    host_edges = _host_edges_for(
        model_min, [v for grp in groups for v in grp], aux_edges
    )
    lift = sorted(set(_relabel(old_of_new, host_edges)))
    parts = []
    roots = []
    for grp in groups:
        members = sorted(
            old_of_new[v]
            for i in grp
            for v in model_min.parts[i]
        )
        parts.append(tuple(members))
        roots.append(old_of_new[model_min.roots[min(grp)]])
    witness = is_bipartite(Graph.from_edges(g.vertex_count, lift))
    if isinstance(witness, Bipartition):
        side_witness = witness
    else:  # pragma: no cover - construction keeps the lift bipartite
        raise AssertionError("lift lost bipartiteness")
    return PipelineReport(
        m_achieved=len(parts),
        parts=tuple(parts),
        roots=tuple(roots),
        lift_edges=tuple(lift),
        partition_witness=side_witness,
        reserve_size=reserve_size,
        budget_used=budget,
        from_witness=from_witness,
    )


def _witness_report(
    g: Graph,
    model_min: MinorModel,
    old_of_new: Sequence[int],
    witness: RBCliqueWitness,
    reserve_size: int,
) -> PipelineReport:
    verts = witness.vertices
    aux_edges = [
        (verts[i], verts[j])
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
    ]
    return _finish_report(
        g,
        model_min,
        old_of_new,
        [(v,) for v in verts],
        aux_edges,
        reserve_size,
        (("projector", 0), ("connector", 0)),
        True,
    )


def _pipeline_report(
    g: Graph,
    model_min: MinorModel,
    aux: AuxiliaryGraph,
    old_of_new: Sequence[int],
    run: _Execution,
    h1: ColoredGraph,
    reserve_size: int,
) -> PipelineReport:
    groups = []
    for idx, members in enumerate(run.parts):
        groups.append(
            tuple(members) + run.projector[idx] + run.connector[idx]
        )
    grown = run.graph
    aux_edges: list[tuple[int, int]] = []
    for grp in groups:
        inside = set(grp)
        aux_edges.extend(
            e for e in grown.graph.edges if e[0] in inside and e[1] in inside
        )
    for i in range(len(run.parts)):
        for j in range(i + 1, len(run.parts)):
            cross = sorted(
                edge_key(u, v)
                for u in run.parts[i]
                for v in run.parts[j]
                if h1.graph.has_edge(u, v)
            )
            aux_edges.append(cross[0])
    budget = (
        ("projector", sum(len(p) for p in run.projector.values())),
        ("connector", sum(len(c) for c in run.connector.values())),
    )
    return _finish_report(
        g, model_min, old_of_new, groups, aux_edges, reserve_size, budget, False
    )


def validate_pipeline_report(g: Graph, report: PipelineReport) -> dict[str, bool]:
    """Check a report against its host: disjoint nonempty parts, parts
    connected in g, all pairs joined, and a bipartite lift inside g."""
    checks = {}
    seen: set[int] = set()
    ok = True
    for part in report.parts:
        if not part or any(not 0 <= v < g.vertex_count for v in part):
            ok = False
        if seen & set(part):
            ok = False
        seen |= set(part)
    checks["parts_disjoint_nonempty"] = ok
    checks["parts_connected"] = all(
        g.is_connected_subset(p) for p in report.parts
    )
    checks["pairs_joined"] = all(
        any(g.has_edge(u, v) for u in report.parts[i] for v in report.parts[j])
        for i in range(report.m_achieved)
        for j in range(i + 1, report.m_achieved)
    )
    edge_ok = all(e in g.edges for e in report.lift_edges)
    lift = Graph.from_edges(g.vertex_count, report.lift_edges) if edge_ok else None
    bip_ok = False
    if lift is not None:
        side = report.partition_witness.side
        bip_ok = set(side) >= set(v for e in report.lift_edges for v in e) and all(
            side[u] != side[v] for u, v in report.lift_edges
        )
    checks["lift_bipartite"] = edge_ok and bip_ok
    checks["all"] = all(checks.values())
    return checks


__all__ = [
    "EXACT_PARTITION_CAP",
    "CompatiblePartition",
    "find_compatible_partition",
    "greedy_compatible_partition",
    "build_projector",
    "ConnectorPath",
    "RBCliqueWitness",
    "connect_pair",
    "PipelineReport",
    "bipartite_minor_pipeline",
    "validate_pipeline_report",
]
