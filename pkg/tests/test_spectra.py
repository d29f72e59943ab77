import math

import numpy as np
import pytest

from tokengraphs import (
    VertexPartition,
    adjacency_spectrum,
    augmented_cyclic_partition,
    augmented_odd_eigs,
    augmented_quotient,
    augmented_two_token_cycle,
    cvetkovic_bound,
    equitable_check,
    interlacing_check,
    laplacian_spectrum,
    make_complete,
    make_cycle,
    make_path,
    make_petersen,
    monotonicity_report,
    phi_eval,
    phi_max_root,
    quotient_spectrum,
    spectrum_contains,
    supertoken2_cycle_eigs,
    supertoken_graph,
    voltage_Bstar,
)


def test_adjacency_spectrum_known_graphs():
    spec = adjacency_spectrum(make_complete(4))
    assert spec.eigenvalues == pytest.approx([-1, -1, -1, 3])
    spec = adjacency_spectrum(make_petersen())
    assert spec.radius == pytest.approx(3.0)
    neg, zero, pos = spec.inertia
    assert (neg, zero, pos) == (4, 0, 6)


def test_laplacian_spectrum():
    spec = laplacian_spectrum(make_cycle(4))
    assert spec.eigenvalues == pytest.approx([0, 2, 2, 4])


def test_quotient_spectrum_is_contained():
    g = make_petersen()
    # distance partition from a vertex is equitable
    part = VertexPartition([[0], sorted(g.adj[0]),
                            sorted(set(range(10)) - {0} - set(g.adj[0]))])
    q = equitable_check(g, part)
    assert q is not None
    spec = quotient_spectrum(q)
    assert spectrum_contains(adjacency_spectrum(g), spec.eigenvalues)


def test_interlacing():
    g = make_cycle(6)
    inner = adjacency_spectrum(make_path(5))
    outer = adjacency_spectrum(g)
    assert interlacing_check(inner, outer)
    # a spectrum that cannot interlace: K_4 inside C_6
    assert not interlacing_check(adjacency_spectrum(make_complete(4)), outer)


def test_closed_form_matches_constructed_spectrum():
    for n in (5, 7, 9):
        f = supertoken_graph(make_cycle(n), 2)
        numeric = adjacency_spectrum(f).eigenvalues
        closed = sorted(lam for (_, _, lam) in supertoken2_cycle_eigs(n))
        assert np.allclose(numeric, closed, atol=1e-9)


def test_voltage_block_spectra_union():
    n = 7
    union = []
    for r in range(n):
        union.extend(np.linalg.eigvalsh(voltage_Bstar(n, r)))
    numeric = adjacency_spectrum(supertoken_graph(make_cycle(n), 2))
    assert np.allclose(sorted(union), numeric.eigenvalues, atol=1e-9)


def test_monotonicity_and_cvetkovic():
    rep = monotonicity_report(9)
    assert all(row["monotone"] for row in rep["rows"].values())
    f = supertoken_graph(make_cycle(9), 2)
    spec = adjacency_spectrum(f, zero_tol=1e-8)
    assert cvetkovic_bound(spec) == 22


def test_augmented_quotient_certified():
    for n, p in [(7, 2), (6, 1), (5, 3), (8, 0)]:
        g = augmented_two_token_cycle(n, p)
        part = augmented_cyclic_partition(n, p)
        q = equitable_check(g, part)
        assert q is not None
        spec = quotient_spectrum(q)
        assert spectrum_contains(adjacency_spectrum(g), spec.eigenvalues)


def test_augmented_quotient_radius_odd():
    for n, p in [(5, 0), (5, 2), (7, 1), (9, 2)]:
        g = augmented_two_token_cycle(n, p)
        rad = adjacency_spectrum(g).radius
        assert max(augmented_odd_eigs(n, p)) == pytest.approx(rad, abs=1e-9)
        assert rad == pytest.approx(4 * math.cos(math.pi / (n + 2 * p)),
                                    abs=1e-9)


def test_phi_recurrence_and_roots():
    # phi_2 = x^2 - 8, phi_3 = x^3 - 12x
    assert phi_eval(2, 3.0) == pytest.approx(1.0)
    assert phi_eval(3, 2.0) == pytest.approx(-16.0)
    assert phi_max_root(2) == pytest.approx(math.sqrt(8), abs=1e-9)
    # the largest root is the spectral radius of the even-cycle family
    for n, p in [(4, 1), (6, 0), (8, 2)]:
        g = augmented_two_token_cycle(n, p)
        assert phi_max_root(n // 2 + p) == pytest.approx(
            adjacency_spectrum(g).radius, abs=1e-6)


def test_quotient_laplacian_f3k4():
    g = make_complete(4)
    f = supertoken_graph(g, 3)
    # degree partition
    classes = {}
    for v in range(f.n):
        classes.setdefault(f.degree(v), []).append(v)
    part = VertexPartition(list(classes.values()))
    q = equitable_check(f, part)
    lap = q.to_laplacian()
    spec = quotient_spectrum(lap)
    expected = sorted([0.0, 6 - math.sqrt(6), 6 + math.sqrt(6)])
    assert np.allclose(spec.eigenvalues, expected, atol=1e-9)
    assert spectrum_contains(laplacian_spectrum(f), spec.eigenvalues)
