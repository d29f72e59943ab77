import pytest

from tokengraphs import (
    chromatic_number,
    classify_triangle,
    clique_number,
    clique_type_census,
    config_adjacent,
    hall_degree_condition,
    independence_number,
    make_complete,
    make_cycle,
    make_hypercube,
    make_path,
    make_petersen,
    max_bipartite_matching,
    maximal_cliques,
    metric_dimension,
    supertoken_graph,
    token_graph,
    verify_certificate,
)
from tokengraphs.errors import GraphTooLargeError


def test_clique_number_basics():
    assert clique_number(make_complete(5)).value == 5
    assert clique_number(make_cycle(6)).value == 2
    assert clique_number(make_cycle(5)).value == 2
    assert clique_number(make_petersen()).value == 2


def test_independence_basics():
    assert independence_number(make_cycle(7)).value == 3
    assert independence_number(make_petersen()).value == 4
    assert independence_number(make_complete(6)).value == 1


def test_certificates_verify():
    for g in (make_cycle(7), make_petersen(), make_hypercube(3)):
        for cert in (independence_number(g), clique_number(g),
                     chromatic_number(g)):
            assert verify_certificate(g, cert)


def test_konig_method_matches_branch():
    for g in (make_hypercube(3), make_cycle(8),
              token_graph(make_cycle(6), 2)):
        branch = independence_number(g, method="branch").value
        if g.name.startswith("F["):
            continue
        konig = independence_number(g, method="konig").value
        assert branch == konig


def test_chromatic_basics():
    assert chromatic_number(make_cycle(6)).value == 2
    assert chromatic_number(make_cycle(7)).value == 3
    assert chromatic_number(make_petersen()).value == 3
    assert chromatic_number(make_complete(4)).value == 4


def test_matching_and_hall():
    g = make_hypercube(3)
    c1 = [v for v in range(8) if bin(v).count("1") % 2 == 0]
    c2 = [v for v in range(8) if bin(v).count("1") % 2 == 1]
    assert max_bipartite_matching(g, c1, c2).value == 4
    assert hall_degree_condition(g, c1, c2, 3)
    assert not hall_degree_condition(make_path(3), [0, 2], [1], 2)


def test_metric_dimension():
    assert metric_dimension(make_cycle(6)).value == 2
    assert metric_dimension(make_complete(4)).value == 3
    assert metric_dimension(make_path(5)).value == 1


def test_config_adjacency():
    g = make_cycle(5)
    assert config_adjacent(g, (0, 0), (0, 1))
    assert config_adjacent(g, (0, 4), (4, 4))
    assert not config_adjacent(g, (0, 0), (1, 1))
    assert not config_adjacent(g, (0, 2), (0, 4))


def test_triangle_classification():
    g = make_complete(4)
    # a triangle around a fixed token at 0
    kind, proj = classify_triangle(g, (0, 1), (0, 2), (0, 3))
    assert kind == "type1" and proj == (1, 2, 3)
    # a triangle missing one vertex of a base triangle from each member
    kind, proj = classify_triangle(g, (0, 1), (0, 2), (1, 2))
    assert kind == "type2" and proj == (0, 1, 2)
    assert classify_triangle(g, (0, 0), (1, 1), (2, 2))[0] == "not-a-triangle"


def test_maximal_cliques_cover():
    g = make_petersen()
    cliques = maximal_cliques(g)
    assert sorted(map(len, cliques)) == [2] * 15


def test_clique_census_projects_to_base():
    g = make_complete(4)
    f = supertoken_graph(g, 3)
    census = clique_type_census(f, base=g)
    assert sum(v for (size, _), v in census.items() if size == 4) == 11
    assert census[(4, "type1")] == 10
    assert census[(4, "type2")] == 1


def test_guards_raise():
    big = make_complete(130)
    with pytest.raises(GraphTooLargeError):
        independence_number(big)
    with pytest.raises(GraphTooLargeError):
        metric_dimension(make_cycle(20))
