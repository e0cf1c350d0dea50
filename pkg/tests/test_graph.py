import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import complete, cycle, path, random_graph, star
from miuz.graph import (GraphError, articulation_points, bfs_distances, build_graph,
                        connected_components, disconnect_node)
from miuz.oracles import articulation_bruteforce


def assert_simple(g):
    for u in range(g.node_count):
        assert u not in g.adjacency[u]
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]


def test_build_path():
    g = build_graph([(0, 1), (1, 2)], 3)
    assert g.adjacency == [{1}, {0, 2}, {1}]
    assert g.edge_count == 2
    assert g.alive.all()


def test_duplicate_edges_collapse():
    g = build_graph([(0, 1), (1, 0), (0, 1)], 2)
    assert g.edge_count == 1
    assert g.edges() == [(0, 1)]


def test_self_loop_rejected():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        build_graph([(0, 0)], 1)


@pytest.mark.parametrize("edge", [(0, 3), (5, 1), (-1, 0)])
def test_out_of_range_rejected(edge):
    with pytest.raises(GraphError):
        build_graph([edge], 3)


def test_disconnect_path_center(p3):
    disconnect_node(p3, 1)
    assert p3.adjacency == [set(), set(), set()]
    assert p3.alive.tolist() == [True, False, True]
    assert p3.edge_count == 0


def test_disconnect_k4_leaves_triangle(k4):
    disconnect_node(k4, 0)
    assert k4.edges() == [(1, 2), (1, 3), (2, 3)]


def test_disconnect_twice_fails():
    g = build_graph([], 1)
    disconnect_node(g, 0)
    with pytest.raises(GraphError, match="already"):
        disconnect_node(g, 0)


def test_components_basic(p3):
    assert connected_components(p3).sizes == [3]
    disconnect_node(p3, 1)
    part = connected_components(p3)
    assert part.sizes == [1, 1]
    assert part.label[1] == -1
    assert part.largest == 1
    assert connected_components(p3, restrict_to_alive=False).sizes == [1, 1, 1]


def test_two_triangles():
    g = build_graph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 6)
    part = connected_components(g)
    assert part.sizes == [3, 3]
    assert part.label[0] == part.label[2] != part.label[4]


def test_components_empty_graph():
    part = connected_components(build_graph([], 0))
    assert part.sizes == [] and part.largest == 0


@pytest.mark.parametrize("g, expected", [
    (path(3), {1}),
    (cycle(4), set()),
    (star(4), {0}),
    (complete(4), set()),
    (path(5), {1, 2, 3}),
])
def test_articulation_points_small(g, expected):
    assert articulation_points(g) == expected


def test_bfs_distances():
    assert bfs_distances(path(3), 0).tolist() == [0, 1, 2]
    assert bfs_distances(cycle(4), 0).tolist() == [0, 1, 2, 1]
    d = bfs_distances(build_graph([], 2), 0)
    assert d[0] == 0 and np.isinf(d[1])


def test_bfs_dead_source(p3):
    disconnect_node(p3, 0)
    with pytest.raises(GraphError):
        bfs_distances(p3, 0)


def test_copy_is_independent(p3):
    h = p3.copy()
    disconnect_node(h, 1)
    assert p3.edge_count == 2 and p3.alive.all()


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_graph_properties(seed):
    g = random_graph(seed, max_n=30)
    assert_simple(g)
    assert articulation_points(g) == articulation_bruteforce(g)
    part = connected_components(g)
    assert sum(part.sizes) == g.alive_count
    for s in range(g.node_count):
        d = bfs_distances(g, s)
        for u, v in g.edges():
            assert d[v] <= d[u] + 1 and d[u] <= d[v] + 1
    # disconnect semantics
    rng = np.random.default_rng(seed)
    n = int(rng.integers(g.node_count))
    before = connected_components(g).count
    edges_before = g.edge_count
    deg = g.degree(n)
    disconnect_node(g, n)
    assert_simple(g)
    after = connected_components(g).count
    if deg == 0:
        assert after == before - 1
        assert g.edge_count == edges_before
    else:
        assert after >= before
        assert g.edge_count < edges_before
    assert sum(connected_components(g).sizes) == g.alive_count
    # articulation points on a partially attacked graph too
    assert articulation_points(g) == articulation_bruteforce(g)
