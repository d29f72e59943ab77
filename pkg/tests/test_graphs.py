import json

import pytest

from tokengraphs import (
    Graph,
    VertexPartition,
    bfs_distances,
    bipartition,
    diameter,
    eccentricities,
    equitable_check,
    has_odd_cycle,
    is_connected,
    is_isomorphic,
    make_complete,
    make_cycle,
    make_cycle_power,
    make_empty,
    make_hypercube,
    make_path,
    make_petersen,
    radius,
)
from tokengraphs.errors import GraphTooLargeError


def test_families_sizes():
    assert (make_cycle(5).n, make_cycle(5).m) == (5, 5)
    assert (make_path(4).n, make_path(4).m) == (4, 3)
    assert (make_complete(4).n, make_complete(4).m) == (4, 6)
    assert (make_hypercube(3).n, make_hypercube(3).m) == (8, 12)
    assert (make_petersen().n, make_petersen().m) == (10, 15)
    assert (make_empty(6).n, make_empty(6).m) == (6, 0)


def test_cycle_power():
    g = make_cycle_power(20, 4)
    assert g.n == 20
    assert all(g.degree(v) == 8 for v in range(20))
    assert g.has_edge(0, 4) and not g.has_edge(0, 5)


def test_degrees_and_edges():
    g = make_path(4)
    assert g.degree_sequence() == [1, 1, 2, 2]
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


def test_json_round_trip():
    g = make_petersen()
    h = Graph.from_json(g.to_json())
    assert h.n == g.n and sorted(h.edges()) == sorted(g.edges())
    assert h.name == g.name and h.labels == g.labels


def test_json_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_json(json.dumps({"name": "x", "n": 2, "edges": [[0, 2]]}))
    with pytest.raises(ValueError):
        Graph.from_json(json.dumps({"name": "x", "n": 2, "edges": [[0, 0]]}))


def test_dot_export():
    dot = make_path(3).to_dot()
    assert dot.startswith("graph") and "--" in dot


def test_distances_and_metric_quantities():
    g = make_cycle(6)
    assert bfs_distances(g, 0)[3] == 3
    assert eccentricities(g) == [3] * 6
    assert diameter(g) == 3 and radius(g) == 3
    assert diameter(make_path(5)) == 4 and radius(make_path(5)) == 2


def test_connectivity():
    assert is_connected(make_cycle(7))
    assert not is_connected(make_empty(3))


def test_bipartition_and_odd_cycles():
    c1, c2 = bipartition(make_hypercube(3))
    assert len(c1) == len(c2) == 4
    assert bipartition(make_cycle(5)) is None
    assert has_odd_cycle(make_cycle(5))
    assert not has_odd_cycle(make_hypercube(4))


def test_equitable_check():
    # oracle: in C_4 with classes {0,1},{2,3} every vertex sees exactly one
    # neighbor in each class, so the partition is equitable
    g = make_cycle(4)
    q = equitable_check(g, VertexPartition([[0, 1], [2, 3]]))
    assert q is not None
    assert q.entries == [[1.0, 1.0], [1.0, 1.0]]
    assert q.class_sizes == [2, 2]
    # a genuinely non-equitable partition of P_3
    assert equitable_check(make_path(3), VertexPartition([[0, 1], [2]])) is None


def test_quotient_laplacian():
    g = make_complete(4)
    q = equitable_check(g, VertexPartition([[0], [1, 2, 3]]))
    lap = q.to_laplacian()
    assert lap.entries[0][0] == pytest.approx(3.0)
    assert lap.entries[0][1] == pytest.approx(-3.0)


def test_isomorphism():
    assert is_isomorphic(make_cycle(6), make_cycle_power(6, 1))
    assert not is_isomorphic(make_cycle(6), make_path(6))
    # degree-regular non-isomorphic pair: C_6 vs 2 triangles
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
                          name="2K_3")
    assert not is_isomorphic(make_cycle(6), two_triangles)


def test_isomorphism_guard():
    g = make_cycle(50)
    with pytest.raises(GraphTooLargeError):
        is_isomorphic(g, g)
    assert is_isomorphic(g, g, force=True)
