from math import comb

import pytest

from tokengraphs import (
    augmented_two_token_cycle,
    cartesian_power,
    cartesian_product,
    counts_to_multiset,
    embed_supertoken,
    embed_token,
    is_induced_embedding,
    is_isomorphic,
    make_complete,
    make_cycle,
    make_path,
    multiset_to_counts,
    num_configs,
    rank_config,
    strong_power,
    strong_product,
    supertoken_graph,
    token_graph,
    unrank_config,
)
from tokengraphs.errors import GraphTooLargeError


def test_config_ranking_round_trip():
    n, k = 5, 3
    seen = set()
    for r in range(num_configs(n, k)):
        counts = unrank_config(r, n, k)
        assert sum(counts) == k and len(counts) == n
        assert rank_config(counts) == r
        seen.add(counts)
    assert len(seen) == comb(n + k - 1, k)


def test_multiset_counts_conversion():
    counts = multiset_to_counts((0, 0, 3), 5)
    assert counts == (2, 0, 0, 1, 0)
    assert counts_to_multiset(counts) == (0, 0, 3)


def test_supertoken_sizes():
    for g, k in [(make_cycle(5), 2), (make_cycle(7), 3), (make_path(4), 2),
                 (make_complete(4), 3)]:
        f = supertoken_graph(g, k)
        assert f.n == comb(g.n + k - 1, k)
        assert f.m == g.m * comb(g.n + k - 2, k - 1)


def test_token_sizes():
    g = make_cycle(5)
    f = token_graph(g, 2)
    assert f.n == comb(5, 2) and f.m == 15
    # the 1-token and 1-supertoken graphs are the graph itself
    assert is_isomorphic(token_graph(g, 1), g)
    assert is_isomorphic(supertoken_graph(g, 1), g)


def test_supertoken_adjacency_is_single_move():
    g = make_path(3)
    f = supertoken_graph(g, 2)
    configs = [tuple(int(x) for x in lab.split(",")) for lab in f.labels]
    for u, v in f.edges():
        a, b = configs[u], configs[v]
        diff = sorted(set(a) ^ set(b)) if a != b else []
        # exactly one token moved along an edge of g
        moved = [x for x in a if a.count(x) != b.count(x)]
        moved += [x for x in b if a.count(x) != b.count(x)]
        assert any(g.has_edge(x, y) for x in set(a) for y in set(b)
                   if x != y), (a, b, diff)
        assert moved


def test_products():
    g, h = make_cycle(3), make_path(2)
    s = strong_product(g, h)
    c = cartesian_product(g, h)
    assert s.n == c.n == 6
    # degrees: strong K_3 x K_2 is K_6; cartesian is the 3-prism
    assert s.m == 15 and c.m == 9
    assert is_isomorphic(s, make_complete(6))


def test_powers():
    g = make_cycle(4)
    assert strong_power(g, 2).n == 16
    assert cartesian_power(g, 2).m == 2 * 4 * 4
    assert is_isomorphic(strong_power(g, 1), g)


def test_augmented_sizes():
    for n in range(4, 9):
        for p in range(4):
            f = augmented_two_token_cycle(n, p)
            assert f.n == comb(n, 2) + p * n
            assert f.m == n * (n - 2) + 2 * p * n


def test_augmented_base_layers():
    # layer 0 is the plain 2-token graph of the cycle
    for n in (5, 6, 7):
        assert is_isomorphic(augmented_two_token_cycle(n, 0),
                             token_graph(make_cycle(n), 2))


def test_embeddings_are_induced():
    g = make_cycle(5)
    f2 = supertoken_graph(g, 2)
    f3 = supertoken_graph(g, 3)
    t2 = token_graph(g, 2)
    assert is_induced_embedding(t2, f2, embed_token(g, 2))
    assert is_induced_embedding(f2, f3, embed_supertoken(g, 2, anchor=0))


def test_size_guard():
    with pytest.raises(GraphTooLargeError):
        supertoken_graph(make_complete(40), 8)
    with pytest.raises(ValueError):
        embed_supertoken(make_cycle(4), 2, anchor=9)
