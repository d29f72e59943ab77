from math import comb

import pytest

from tokengraphs import (
    ColorClassPartition,
    alpha_augmented,
    alpha_supertoken2_cycle,
    best_bound_by_profile,
    best_partition_bound,
    bipartite_bound,
    bipartite_stable_sets,
    chromatic_number,
    independence_number,
    independent_set_2cycle,
    information_rate,
    make_cycle,
    make_hypercube,
    partition_bound,
    partition_witness,
    shannon_lower_bound,
    supertoken_graph,
    bipartite_row,
)
from tokengraphs.errors import FormulaInconsistencyError


def test_partition_bound_hypercube_example():
    # Q_3 2-colored, both classes of size 4, two tokens on one class:
    # 2 * C(5,2) = 20
    coloring = [bin(v).count("1") % 2 for v in range(8)]
    p = ColorClassPartition(coloring, [[(0, 2)], [(1, 2)]], 2)
    assert partition_bound(p) == 20


def test_partition_validation():
    coloring = [0, 1, 0, 1]
    with pytest.raises(ValueError):
        ColorClassPartition(coloring, [[(0, 1)], [(1, 1)]], 2).validate()
    with pytest.raises(ValueError):
        ColorClassPartition(coloring, [[(0, 2)], [(0, 2)]], 2).validate()
    with pytest.raises(ValueError):
        # improper coloring of C_4 is rejected
        ColorClassPartition([0, 0, 1, 1], [[(0, 2)], [(1, 2)]], 2).validate(
            make_cycle(4))
    ColorClassPartition(coloring, [[(0, 2)], [(1, 2)]], 2).validate(
        make_cycle(4))


def test_best_partition_bound_is_at_least_any_grouping():
    g = make_cycle(6)
    coloring = chromatic_number(g).witness
    best, part = best_partition_bound(g, coloring, 3)
    part.validate(g)
    assert partition_bound(part) == best
    single = ColorClassPartition(coloring, [[(0, 3)], [(1, 3)]], 3)
    assert best >= partition_bound(single)


def test_partition_bound_is_sound():
    # the grouped-configuration set really is independent
    g = make_cycle(6)
    f = supertoken_graph(g, 2)
    coloring = chromatic_number(g).witness
    best, part = best_partition_bound(g, coloring, 2)
    witness = partition_witness(part)
    assert len(witness) == best
    assert best <= independence_number(f).value


def test_bipartite_bound_values():
    assert bipartite_bound(4, 4, 2) == 2 * comb(5, 2) == 20
    assert bipartite_bound(5, 5, 8) == 12190
    assert bipartite_row(1, 9) == [k // 2 + 1 for k in range(10)]


def test_bipartite_stable_sets():
    g = make_hypercube(3)
    s1, s2 = bipartite_stable_sets(g, 2)
    f = supertoken_graph(g, 2)
    assert len(s1) + len(s2) == f.n
    for part in (s1, s2):
        for u in part:
            for v in part:
                assert not f.has_edge(u, v)


def test_alpha_2cycle_formula():
    # exact cases by residue class mod 4
    assert alpha_supertoken2_cycle(8) == 2 * 10
    assert alpha_supertoken2_cycle(9) == 2 * 11
    assert alpha_supertoken2_cycle(10) == 3 * 10
    assert alpha_supertoken2_cycle(11) == 3 * 11
    for n in range(4, 12):
        s = independent_set_2cycle(n)
        assert len(s) == alpha_supertoken2_cycle(n)


def test_alpha_augmented_formula():
    assert alpha_augmented(5, 4) == 15
    assert alpha_augmented(4, 4) == 12
    # parity corrections keep everything integral
    for n in range(3, 10):
        for p in range(0, 5):
            assert isinstance(alpha_augmented(n, p), int)


def test_information_rate():
    assert information_rate(4, 2) == 1.0
    assert information_rate(20, 2) == pytest.approx(2.1609640, abs=1e-6)
    with pytest.raises(ValueError):
        information_rate(0, 2)


def test_shannon_lower_bound_alias():
    coloring = [bin(v).count("1") % 2 for v in range(8)]
    p = ColorClassPartition(coloring, [[(0, 2)], [(1, 2)]], 2)
    assert shannon_lower_bound(p) == partition_bound(p)


def test_best_bound_by_profile_keys():
    g = make_cycle(6)
    coloring = chromatic_number(g).witness
    out = best_bound_by_profile(g, coloring, 2)
    assert max(out.values()) == best_partition_bound(g, coloring, 2)[0]
