import pytest

from rbminor.errors import InstanceTooLarge
from rbminor.graphs import (
    BLUE,
    RED,
    Bipartition,
    ColoredGraph,
    Graph,
    OddCycle,
    edge_key,
    enumerate_cycles,
    is_bipartite,
    subdivide_blue_once,
)


def test_edge_key_normalises():
    assert edge_key(3, 1) == (1, 3)
    assert edge_key(1, 3) == (1, 3)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 1)}))  # not normalised


def test_constructors():
    assert Graph.complete(4).edge_count == 6
    assert Graph.empty(5).edge_count == 0
    assert Graph.cycle(5).edge_count == 5
    assert Graph.path(4).edge_count == 3
    with pytest.raises(ValueError):
        Graph.cycle(2)


def test_adjacency_and_masks_agree():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4), (0, 4)])
    for v in range(5):
        mask = g.adjacency_masks[v]
        assert {u for u in range(5) if (mask >> u) & 1} == set(g.adjacency[v])
    assert g.degree(1) == 2
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)


def test_with_edges_and_spanning_subgraph():
    g = Graph.path(4)
    g2 = g.with_edges([(0, 3)])
    assert g2.has_edge(0, 3) and g2.edge_count == 4
    sub = g2.spanning_subgraph([(0, 1), (0, 3)])
    assert sub.edge_count == 2 and sub.vertex_count == 4
    with pytest.raises(ValueError):
        g.spanning_subgraph([(0, 2)])


def test_is_connected_subset():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
    assert g.is_connected_subset([0, 1, 2])
    assert not g.is_connected_subset([0, 1, 3])
    assert g.is_connected_subset([5])
    assert not g.is_connected_subset([])


def test_colored_graph_basics():
    cg = ColoredGraph.from_edge_colors(3, [(0, 1, "R"), (1, 2, "B")])
    assert cg.color_of(1, 0) == RED
    assert cg.color_of(1, 2) == BLUE
    assert cg.red_count == 1 and cg.blue_count == 1
    assert cg.blue == frozenset({(1, 2)})
    with pytest.raises(KeyError):
        cg.color_of(0, 2)
    with pytest.raises(ValueError):
        ColoredGraph.from_edge_colors(3, [(0, 1, "G")])
    with pytest.raises(ValueError):
        ColoredGraph(Graph.empty(3), frozenset({(0, 1)}))


def test_monochromatic_and_swap():
    g = Graph.cycle(4)
    allred = ColoredGraph.monochromatic(g, RED)
    assert allred.red == g.edges
    assert allred.swap_colors().red == frozenset()
    assert allred.swap_colors().swap_colors() == allred


def test_induced_on_keeps_vertex_range():
    cg = ColoredGraph.from_edge_colors(4, [(0, 1, "R"), (1, 2, "B"), (2, 3, "R")])
    sub = cg.induced_on([0, 1, 2])
    assert sub.graph.vertex_count == 4
    assert sub.graph.edges == frozenset({(0, 1), (1, 2)})
    assert sub.red == frozenset({(0, 1)})


def test_with_colored_edges_rejects_recolor():
    cg = ColoredGraph.from_edge_colors(3, [(0, 1, "R")])
    cg2 = cg.with_colored_edges([(1, 2, "B"), (0, 1, "R")])
    assert cg2.graph.edge_count == 2
    with pytest.raises(ValueError):
        cg.with_colored_edges([(0, 1, "B")])


def test_bipartition():
    p = Bipartition({0: 0, 1: 1, 2: 0})
    assert p.left() == (0, 2) and p.right() == (1,)
    assert p.crossing(0, 1) and not p.crossing(0, 2)
    q = p.extended(3, 1)
    assert 3 in q and 3 not in p
    with pytest.raises(ValueError):
        p.extended(0, 1)
    with pytest.raises(ValueError):
        Bipartition({0: 2})
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert p.is_valid_for(g)
    assert not Bipartition({0: 0, 1: 0, 2: 0}).is_valid_for(g)


def test_odd_cycle_type():
    c = OddCycle((0, 1, 2))
    assert len(c) == 3
    assert c.is_valid_for(Graph.cycle(3))
    with pytest.raises(ValueError):
        OddCycle((0, 1))
    with pytest.raises(ValueError):
        OddCycle((0, 1, 2, 3))
    with pytest.raises(ValueError):
        OddCycle((0, 1, 0))


def test_is_bipartite_even_cycle():
    out = is_bipartite(Graph.cycle(6))
    assert isinstance(out, Bipartition)
    assert out.is_valid_for(Graph.cycle(6))


def test_is_bipartite_odd_cycle_witness():
    out = is_bipartite(Graph.cycle(7))
    assert isinstance(out, OddCycle)
    assert out.is_valid_for(Graph.cycle(7))


def test_is_bipartite_handles_components():
    # one bipartite component, one odd component
    g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 2), (5, 6)])
    out = is_bipartite(g)
    assert isinstance(out, OddCycle)
    assert set(out.vertices) == {2, 3, 4}


def test_subdivide_blue_once():
    cg = ColoredGraph.from_edge_colors(3, [(0, 1, "R"), (1, 2, "B"), (0, 2, "B")])
    g = subdivide_blue_once(cg)
    assert g.vertex_count == 5
    # blue edges sorted: (0,2) gets vertex 3, (1,2) gets vertex 4
    assert g.has_edge(0, 1)
    assert g.has_edge(0, 3) and g.has_edge(2, 3)
    assert g.has_edge(1, 4) and g.has_edge(2, 4)
    assert not g.has_edge(1, 2) and not g.has_edge(0, 2)


def test_enumerate_cycles_k4():
    cycles = enumerate_cycles(Graph.complete(4))
    assert len(cycles) == 7  # four triangles, three quadrilaterals
    assert all(c[0] == min(c) for c in cycles)
    assert len(set(cycles)) == 7


def test_enumerate_cycles_cap():
    with pytest.raises(InstanceTooLarge):
        enumerate_cycles(Graph.empty(17))
    with pytest.raises(InstanceTooLarge):
        enumerate_cycles(Graph.empty(10), max_vertices=9)
