"""Compatible partitions, the projector/connector toolkit, and the full
bipartite-minor pipeline."""

from itertools import combinations

import pytest

from rbminor.constructions import (
    derive_seed,
    gh_model,
    random_coloring,
    random_graph,
)
from rbminor.errors import BudgetExhausted, InstanceTooLarge, PoolExhausted
from rbminor.extract import (
    ConnectorPath,
    RBCliqueWitness,
    bipartite_minor_pipeline,
    build_projector,
    connect_pair,
    find_compatible_partition,
    greedy_compatible_partition,
    validate_pipeline_report,
)
from rbminor.graphs import BLUE, RED, ColoredGraph, Graph, edge_key
from rbminor.models import MinorModel
from rbminor.rb import RBBipartition


def test_greedy_partition_degenerate():
    assert greedy_compatible_partition(Graph.empty(0)).parts == ()
    assert greedy_compatible_partition(Graph.empty(4)).parts == ((0,),)


def test_greedy_partition_is_compatible():
    for seed in range(15):
        n = 4 + seed % 6
        g = random_graph(n, 0.5, derive_seed(55, seed))
        part = greedy_compatible_partition(g)
        assert part.is_valid_for(g)


def test_find_compatible_partition_exact():
    g = Graph.complete(4)
    part = find_compatible_partition(g, 4)
    assert part is not None and part.order == 4
    assert part.is_valid_for(g)
    assert find_compatible_partition(g, 5) is None
    with pytest.raises(InstanceTooLarge):
        find_compatible_partition(Graph.empty(13), 1)


def complete_colors(vertices, color):
    return {edge_key(a, b): color for a, b in combinations(vertices, 2)}


def test_build_projector_covers_everyone():
    # members 0..3 placed on X; pool vertices connect by colour table
    base = ColoredGraph(Graph.empty(10), frozenset())
    part = RBBipartition({0: 0, 1: 0, 2: 1, 3: 1})
    colors = {}
    for s in (4, 5, 6):
        for u in range(4):
            # red to X members, blue to Y members: placing s on Y covers all
            colors[edge_key(s, u)] = RED if part.side[u] == 0 else BLUE
    chain, grown, newpart = build_projector(base, part, [0, 1, 2, 3], [4, 5, 6], colors)
    assert len(chain) == 1  # first pool vertex covers all four members
    s = chain[0]
    assert all(grown.graph.has_edge(s, u) for u in range(4))
    assert newpart.is_valid_on_edges(grown)


def test_build_projector_halving_bound():
    # adversarial colours: each pool vertex can cover only half
    base = ColoredGraph(Graph.empty(12), frozenset())
    members = list(range(8))
    part = RBBipartition({u: 0 for u in members})
    pool = [8, 9, 10, 11]
    colors = {}
    # pool vertex 8 red to 0..3, blue to 4..7; then 9 splits the rest, etc.
    colors.update({edge_key(8, u): RED if u < 4 else BLUE for u in members})
    colors.update({edge_key(9, u): RED if u < 6 else BLUE for u in members})
    colors.update({edge_key(10, u): RED if u < 7 else BLUE for u in members})
    colors.update({edge_key(11, u): RED for u in members})
    chain, grown, newpart = build_projector(base, part, members, pool, colors)
    assert len(chain) <= 4  # floor(log2 8) + 1
    for u in members:
        assert any(grown.graph.has_edge(s, u) for s in chain)


def test_build_projector_pool_exhausted():
    base = ColoredGraph(Graph.empty(4), frozenset())
    part = RBBipartition({0: 0, 1: 1})
    with pytest.raises(PoolExhausted):
        build_projector(base, part, [0, 1], [], {})


def test_connect_pair_direct_one_internal():
    base = ColoredGraph(Graph.empty(5), frozenset())
    part = RBBipartition({0: 0, 1: 1})
    colors = {edge_key(0, 2): RED, edge_key(1, 2): BLUE,
              edge_key(0, 3): BLUE, edge_key(1, 3): BLUE,
              edge_key(2, 3): BLUE}
    out = connect_pair(base, part, 0, 1, "odd", [2, 3], colors)
    assert isinstance(out, ConnectorPath)
    assert out.path == (0, 2, 1)
    assert out.internals == (2,)
    assert out.partition.side[2] == 1  # red from X flips to Y, blue keeps


def test_connect_pair_two_internals():
    # no single vertex works: red-red or blue-blue to both endpoints
    base = ColoredGraph(Graph.empty(6), frozenset())
    part = RBBipartition({0: 0, 1: 1})
    colors = {
        edge_key(0, 2): RED, edge_key(1, 2): RED,
        edge_key(0, 3): BLUE, edge_key(1, 3): BLUE,
        edge_key(2, 3): BLUE,
    }
    out = connect_pair(base, part, 0, 1, "odd", [2, 3], colors)
    assert isinstance(out, ConnectorPath)
    assert len(out.internals) == 2
    # walk parity: number of red edges along the path must be odd
    reds = sum(
        1 for a, b in zip(out.path, out.path[1:]) if colors[edge_key(a, b)] == RED
    )
    assert reds % 2 == 1


def test_connect_pair_witness_when_nothing_joins():
    # all pool edges blue everywhere: an even connection cannot exist
    base = ColoredGraph(Graph.empty(7), frozenset())
    part = RBBipartition({0: 0, 1: 1})
    pool = [2, 3, 4, 5]
    colors = complete_colors([0, 1] + pool, BLUE)
    # x,y on opposite sides want odd parity; all-blue gives only even paths
    out = connect_pair(base, part, 0, 1, "odd", pool, colors)
    assert isinstance(out, RBCliqueWitness)
    assert out.order == 4
    assert set(out.vertices) == set(pool)
    # witness must actually describe the pool: blue within, red across
    for a, b in combinations(pool, 2):
        crossing = out.side[a] != out.side[b]
        assert crossing == (colors[edge_key(a, b)] == RED)


def test_connect_pair_parity_validation():
    base = ColoredGraph(Graph.empty(4), frozenset())
    part = RBBipartition({0: 0, 1: 1})
    colors = complete_colors([0, 1, 2], BLUE)
    with pytest.raises(ValueError):
        connect_pair(base, part, 0, 1, "even", [2], colors)  # sides force odd
    with pytest.raises(ValueError):
        connect_pair(base, part, 0, 0, "even", [2], colors)
    with pytest.raises(ValueError):
        connect_pair(base, part, 0, 1, "weird", [2], colors)


def test_pipeline_on_complete_host():
    g = Graph.complete(9)
    model = MinorModel.create(g, [(v,) for v in range(9)])
    report = bipartite_minor_pipeline(g, model, 0.25)
    checks = validate_pipeline_report(g, report)
    assert checks["all"], checks
    assert report.m_achieved >= 2
    assert report.reserve_size == 3
    rebuilt = report.model(g)
    rebuilt.validate()


def test_pipeline_on_subdivision_host():
    h = random_graph(6, 0.5, 31)
    host, model = gh_model(h)
    report = bipartite_minor_pipeline(host, model, 0.25)
    checks = validate_pipeline_report(host, report)
    assert checks["all"], checks
    assert report.m_achieved >= 1


def test_pipeline_epsilon_validation():
    g = Graph.complete(5)
    model = MinorModel.create(g, [(v,) for v in range(5)])
    for bad in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(ValueError):
            bipartite_minor_pipeline(g, model, bad)


def test_pipeline_budget_exhausted_after_reserve():
    g = Graph.complete(2)
    model = MinorModel.create(g, [(0,), (1,)])
    with pytest.raises(BudgetExhausted):
        bipartite_minor_pipeline(g, model, 0.9)  # reserve swallows everything


def test_pipeline_report_fields():
    g = Graph.complete(8)
    model = MinorModel.create(g, [(v,) for v in range(8)])
    report = bipartite_minor_pipeline(g, model, 0.25)
    assert len(report.parts) == report.m_achieved
    assert len(report.roots) == report.m_achieved
    assert set(report.budget()) == {"projector", "connector"}
    assert all(v >= 0 for v in report.budget().values())
    for i, part in enumerate(report.parts):
        assert report.roots[i] in part
    covered = {v for p in report.parts for v in p}
    for a, b in report.lift_edges:
        assert a in covered and b in covered
    assert len(report.partition_witness.side) >= len(covered)
