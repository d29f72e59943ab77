"""Regenerates every numeric table and figure-level claim as pass/fail cases.

Golden values live as JSON data files with provenance tags; documented
typos are data (typo_cells), not code branches.  Conjecture and heuristic
cases carry status "reported" and never fail a run.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import bounds, constructions, graphs, invariants, spectra

PRINTED_TOL = 1e-3     # against printed-reference decimals
DERIVED_TOL = 1e-8   # against internally derived quantities


@dataclass
class VerificationCase:
    id: str
    status: str            # pass | fail | reported
    expected: str
    computed: str
    tolerance: float | None = None
    details: list = field(default_factory=list)


def load_golden(name):
    path = resources.files("tokengraphs.data").joinpath(name)
    data = json.loads(path.read_text())
    if "provenance" not in data:
        raise ValueError(f"golden file {name} lacks a provenance tag")
    return data


def _case(case_id, ok, expected, computed, tolerance=None, details=None,
          reported=False):
    status = "reported" if reported else ("pass" if ok else "fail")
    return VerificationCase(case_id, status, str(expected), str(computed),
                            tolerance, details or [])


def _multiset_close(a, b, tol):
    a, b = sorted(a), sorted(b)
    return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))


def _golden_multiset(data):
    out = []
    for row in data["rows"].values():
        out.extend(row["values"] * row["multiplicity"])
    return out


# -- coloring lift --------------------------------------------------------------

def modular_color_lift(g, k, force=False):
    """Chromatic coloring of g lifted to its k-supertoken by modular sums.

    Each configuration gets the sum of its token colors mod chi(g).
    Returns (lift colors in supertoken rank order, colors actually used);
    raises if the lift is not proper.
    """
    from .errors import PropertyViolationError

    chi = invariants.chromatic_number(g, force=force)
    f = constructions.supertoken_graph(g, k, force=force)
    lift = []
    for r in range(f.n):
        counts = constructions.unrank_config(r, g.n, k)
        lift.append(sum(c * chi.witness[v] for v, c in enumerate(counts))
                    % chi.value)
    for u, v in f.edges():
        if lift[u] == lift[v]:
            raise PropertyViolationError(
                f"modular lift not proper on edge ({u},{v}) of {f.name}")
    return lift, len(set(lift))


# -- suite ------------------------------------------------------------------------

def omega_chi_suite():
    return [
        graphs.make_complete(3),
        graphs.make_complete(4),
        graphs.make_cycle(4),
        graphs.make_cycle(5),
        graphs.make_cycle(6),
        graphs.make_cycle(7),
        graphs.make_path(5),
        graphs.make_hypercube(3),
        graphs.make_petersen(),
    ]


# -- individual cases --------------------------------------------------------------

def case_f2c7_eigs():
    data = load_golden("f2c7_eigs.json")
    golden = _golden_multiset(data)
    f = constructions.supertoken_graph(graphs.make_cycle(7), 2)
    computed = list(spectra.adjacency_spectrum(f).eigenvalues)
    ok = _multiset_close(golden, computed, data["tolerance"])
    return _case("f2c7-eigs", ok, f"{len(golden)} printed eigenvalues",
                 f"{len(computed)} computed eigenvalues, "
                 f"multiset match={ok}", data["tolerance"])


def case_f2c9():
    data = load_golden("f2c9_eigs.json")
    tol = data["tolerance"]
    typos = {(t["r"], t["k"]): t for t in data.get("typo_cells", [])}
    closed = {(r, k): lam for r, k, lam in spectra.supertoken2_cycle_eigs(9)}
    details = []
    ok = True
    for r_str, row in data["rows"].items():
        r = int(r_str)
        rr = 9 - r if r else 0  # printed rows cover both r and n-r
        for k, printed in enumerate(row["values"], start=1):
            cell = typos.get((r, k))
            target = cell["formula"] if cell else printed
            good = (abs(closed[(r, k)] - target) <= tol
                    and abs(closed[(rr, k)] - target) <= tol)
            ok &= good
            if cell:
                details.append(
                    f"(r={r}, k={k}): formula {cell['formula']}, printed "
                    f"{printed} is a documented typo")
            elif not good:
                details.append(f"(r={r}, k={k}): closed {closed[(r, k)]:.4f} "
                               f"!= printed {printed}")
    return _case("f2c9", ok,
                 "45 printed eigenvalues (one documented typo)",
                 f"{len(details)} annotated cells" if details else
                 "all cells match", tol, details)


def case_closed_form():
    details = []
    ok = True
    for n in (3, 5, 7, 9, 11):
        f = constructions.supertoken_graph(graphs.make_cycle(n), 2)
        numeric = spectra.adjacency_spectrum(f).eigenvalues
        closed = sorted(lam for _, _, lam in spectra.supertoken2_cycle_eigs(n))
        match = _multiset_close(closed, list(numeric), 1e-9)
        ok &= match
        details.append(f"n={n}: closed form vs numeric match={match}")
    return _case("closed-form", ok, "closed form equals numeric spectrum (odd n)",
                 "; ".join(details), 1e-9, details)


def case_bipartite_table():
    data = load_golden("bipartite_table.json")
    typos = {(t["c"], t["k"]): t for t in data["typo_cells"]}
    details = []
    ok = True
    for c_str, row in data["rows"].items():
        c = int(c_str)
        computed = bounds.bipartite_row(c, len(row) - 1)
        for k, printed in enumerate(row):
            if (c, k) in typos:
                t = typos[(c, k)]
                good = computed[k] == t["formula"]
                details.append(
                    f"(c={c}, k={k}): formula {computed[k]}, printed "
                    f"{printed} is a documented typo")
                ok &= good
            elif computed[k] != printed:
                details.append(f"(c={c}, k={k}): formula {computed[k]} != "
                               f"printed {printed}")
                ok = False
    return _case("bipartite-row", ok, "printed grid (one documented typo)",
                 f"{len(details)} annotated cells" if details else
                 "all cells match", None, details)


def case_augmented_alpha():
    details = []
    ok = True
    for n in range(3, 9):
        for p in range(0, 4):
            formula = bounds.alpha_augmented(n, p)
            g = constructions.augmented_two_token_cycle(n, p)
            exact = invariants.independence_number(g).value
            if formula != exact:
                details.append(f"(n={n}, p={p}): formula {formula} != "
                               f"exact {exact}")
                ok = False
    return _case("augmented-alpha", ok, "piecewise formula equals exact solver "
                 "(n=3..8, p=0..3)",
                 "all agree" if ok else "; ".join(details), None, details)


def case_even_radii():
    data = load_golden("even_radii.json")
    details = []
    ok = True
    for r_str, printed in data["radii"].items():
        r = int(r_str)
        root = spectra.phi_max_root(r)
        good = abs(root - printed) <= data["tolerance"]
        # cross-check against a constructed even-cycle instance
        n, p = (4, r - 2) if r >= 2 else (None, None)
        g = constructions.augmented_two_token_cycle(n, p)
        radius = spectra.adjacency_spectrum(g).radius
        good &= abs(root - radius) <= 1e-6
        ok &= good
        details.append(f"r={r}: root {root:.4f}, printed {printed}, "
                       f"constructed radius {radius:.6f}")
    return _case("even-radii", ok, "printed spectral radii r=2..7",
                 "all match" if ok else "mismatch", data["tolerance"], details)


def case_q3_alpha():
    q3 = graphs.make_hypercube(3)
    f = constructions.supertoken_graph(q3, 2)
    alpha = invariants.independence_number(f).value
    bb = bounds.bipartite_bound(4, 4, 2)
    coloring = invariants.chromatic_number(q3).witness
    pb, _ = bounds.best_partition_bound(q3, coloring, 2)
    ok = alpha == bb == pb == 20
    return _case("q3-alpha", ok, "alpha = bipartite bound = partition "
                 "bound = 20", f"alpha={alpha}, bipartite={bb}, partition={pb}")


def case_augmented_spot():
    a5 = invariants.independence_number(
        constructions.augmented_two_token_cycle(5, 4)).value
    a4 = invariants.independence_number(
        constructions.augmented_two_token_cycle(4, 4)).value
    ok = (a5, a4) == (15, 12)
    return _case("augmented-spot", ok, "alpha(F_2^4(C_5))=15, alpha(F_2^4(C_4))=12",
                 f"computed {a5}, {a4}")


def case_augmented_iso():
    details = []
    ok = True
    for n in range(4, 8):
        cyc = graphs.make_cycle(n)
        i1 = graphs.is_isomorphic(constructions.augmented_two_token_cycle(n, 1),
                                  constructions.supertoken_graph(cyc, 2))
        i0 = graphs.is_isomorphic(constructions.augmented_two_token_cycle(n, 0),
                                  constructions.token_graph(cyc, 2))
        ok &= i1 and i0
        details.append(f"n={n}: layer-1 iso 2-supertoken={i1}, "
                       f"layer-0 iso 2-token={i0}")
    return _case("augmented-iso", ok,
                 "augmented identities for p in {0,1}, n=4..7",
                 "; ".join(details), None, details)


def case_alpha_2cycle():
    details = []
    ok = True
    for n in range(2, 12):
        formula = bounds.alpha_supertoken2_cycle(n)
        base = graphs.make_complete(2) if n == 2 else graphs.make_cycle(n)
        f = constructions.supertoken_graph(base, 2)
        exact = invariants.independence_number(f).value
        good = formula == exact
        if n >= 4:
            witness = bounds.independent_set_2cycle(n)
            ranks = [constructions.rank_config(c) for c in witness]
            for i, u in enumerate(ranks):
                for v in ranks[i + 1:]:
                    if f.has_edge(u, v):
                        good = False
            good &= len(witness) == formula
        ok &= good
        details.append(f"n={n}: formula {formula}, exact {exact}")
    return _case("alpha-2cycle", ok,
                 "theorem formula = exact alpha, constructions independent "
                 "(n=2..11)", "all agree" if ok else "; ".join(details),
                 None, details)


def case_cvetkovic():
    details = []
    ok = True
    for n in (5, 7, 9, 11):
        f = constructions.supertoken_graph(graphs.make_cycle(n), 2)
        s = spectra.adjacency_spectrum(f)
        neg, zero, pos = s.inertia
        bound = spectra.cvetkovic_bound(s)
        alpha = bounds.alpha_supertoken2_cycle(n)
        big = (s.size + 1) // 2 if n % 4 == 1 else s.size // 2
        good = bound == alpha and zero == 0 and max(pos, neg) == big
        ok &= good
        details.append(f"n={n}: inertia ({neg},{zero},{pos}), bound {bound}, "
                       f"alpha {alpha}")
    return _case("cvetkovic", ok, "inertia bound tight for odd n in "
                 "{5,7,9,11}", "; ".join(details), None, details)


def case_thm_omega():
    details = []
    ok = True
    for g in omega_chi_suite():
        base_omega = invariants.clique_number(g).value
        for k in (2, 3):
            if constructions.num_configs(g.n, k) > invariants.ALPHA_GUARD:
                details.append(f"{g.name} k={k}: skipped (guard)")
                continue
            f = constructions.supertoken_graph(g, k)
            w = invariants.clique_number(f).value
            good = w == base_omega
            ok &= good
            details.append(f"{g.name} k={k}: omega {w} vs base {base_omega}")
    return _case("thm-omega", ok, "clique number preserved by supertoken",
                 "all equal" if ok else "; ".join(details), None, details)


def case_thm_chi():
    details = []
    ok = True
    for g in omega_chi_suite():
        base_chi = invariants.chromatic_number(g).value
        for k in (2, 3):
            if constructions.num_configs(g.n, k) > invariants.CHROMATIC_GUARD:
                details.append(f"{g.name} k={k}: skipped (guard)")
                continue
            f = constructions.supertoken_graph(g, k)
            chi = invariants.chromatic_number(f).value
            _, used = modular_color_lift(g, k)
            good = chi == base_chi and used <= base_chi
            ok &= good
            details.append(f"{g.name} k={k}: chi {chi} vs base {base_chi}, "
                           f"lift uses {used}")
    return _case("thm-chi", ok, "chromatic number preserved by supertoken",
                 "all equal" if ok else "; ".join(details), None, details)


def case_bipartite_equality():
    """Reported case: for bipartite suite graphs with the Hall degree
    condition, exact alpha of the supertoken equals the bipartite formula."""
    suite = [graphs.make_cycle(4), graphs.make_cycle(6), graphs.make_cycle(8),
             graphs.make_hypercube(3), graphs.make_path(4),
             graphs.make_path(5)]
    details = []
    counterexamples = []
    for g in suite:
        parts = graphs.bipartition(g)
        if parts is None:
            continue
        c1, c2 = parts
        if invariants.independence_number(g).value != len(c2):
            details.append(f"{g.name}: alpha != |C2|, out of conjecture scope")
            continue
        for k in (2, 3):
            if constructions.num_configs(g.n, k) > invariants.ALPHA_GUARD:
                continue
            f = constructions.supertoken_graph(g, k)
            exact = invariants.independence_number(f).value
            formula = bounds.bipartite_bound(len(c1), len(c2), k)
            if exact == formula:
                details.append(f"{g.name} k={k}: equality at {exact}")
            else:
                counterexamples.append(
                    f"{g.name} k={k}: exact {exact} != formula {formula}")
    details.extend(counterexamples)
    return _case("bipartite-equality", not counterexamples,
                 "equality of exact alpha with the bipartite formula "
                 "(conjecture, reported only)",
                 f"{len(counterexamples)} counterexamples", None, details,
                 reported=True)


def case_counts():
    import random

    rng = random.Random(20260823)
    details = []
    ok = True
    for trial in range(20):
        n = rng.randint(3, 7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        g = graphs.Graph(n, edges, name=f"R{trial}")
        for k in (2, 3):
            f = constructions.supertoken_graph(g, k)
            want_v = constructions.num_configs(n, k)
            want_e = g.m * math.comb(n + k - 2, k - 1)
            good = f.n == want_v and f.m == want_e
            ok &= good
            if not good:
                details.append(f"{g.name} k={k}: got ({f.n},{f.m}), "
                               f"want ({want_v},{want_e})")
    connected = [graphs.make_cycle(4), graphs.make_cycle(5),
                 graphs.make_path(3), graphs.make_path(4),
                 graphs.make_complete(3)]
    for g in connected:
        d, r = graphs.diameter(g), graphs.radius(g)
        for k in (2, 3):
            f = constructions.supertoken_graph(g, k)
            good = (graphs.diameter(f) == k * d
                    and graphs.radius(f) <= k * r)
            ok &= good
            if not good:
                details.append(f"{g.name} k={k}: diameter/radius violated")
    md = invariants.metric_dimension(
        constructions.supertoken_graph(graphs.make_path(3), 2)).value
    ok &= md <= 3
    details.append(f"metric dimension of 2-supertoken of P_3: {md} <= 3")
    return _case("counts", ok, "vertex/edge counts, diameter, radius, "
                 "metric dimension", "all hold" if ok else "; ".join(details),
                 None, details)


def case_c20_groupings():
    data = load_golden("c20_groupings.json")
    g = graphs.make_cycle_power(20, 4)
    coloring = invariants.chromatic_number(g).witness
    table = bounds.best_bound_by_profile(g, coloring, 3)
    details = []
    ok = True
    for row in data["rows"]:
        profile = tuple(row["profile"])
        got = table.get(profile)
        good = got == row["bound"]
        ok &= good
        details.append(f"profile {profile}: computed {got}, "
                       f"printed {row['bound']}")
    best, _ = bounds.best_partition_bound(g, coloring, 3)
    ok &= best == data["best"]
    details.append(f"best over all groupings: {best}")
    return _case("c20-groupings", ok, "five grouping rows and best bound 104",
                 "all match" if ok else "; ".join(details), None, details)


CASES = {
    "f2c7-eigs": case_f2c7_eigs,
    "bipartite-row": case_bipartite_table,
    "augmented-alpha": case_augmented_alpha,
    "even-radii": case_even_radii,
    "f2c9": case_f2c9,
    "closed-form": case_closed_form,
    "q3-alpha": case_q3_alpha,
    "augmented-spot": case_augmented_spot,
    "augmented-iso": case_augmented_iso,
    "alpha-2cycle": case_alpha_2cycle,
    "cvetkovic": case_cvetkovic,
    "thm-omega": case_thm_omega,
    "thm-chi": case_thm_chi,
    "bipartite-equality": case_bipartite_equality,
    "counts": case_counts,
    "c20-groupings": case_c20_groupings,
}


def run_cases(case_ids=None):
    """Run the requested cases (all by default), ordered by case id."""
    ids = sorted(CASES) if case_ids is None else list(case_ids)
    out = []
    for cid in ids:
        if cid not in CASES:
            raise ValueError(f"unknown verification case: {cid}")
        out.append(CASES[cid]())
    return out


def report_lines(cases, verbose=False):
    lines = []
    for case in cases:
        lines.append(f"[{case.status.upper():8s}] {case.id}: "
                     f"expected {case.expected}; computed {case.computed}")
        if verbose:
            lines.extend(f"    {d}" for d in case.details)
    failed = [c for c in cases if c.status == "fail"]
    lines.append(f"{len(cases)} cases, {len(failed)} failed, "
                 f"{sum(1 for c in cases if c.status == 'reported')} reported")
    return lines
