"""Dense symmetric eigen-solving, quotient spectra, voltage-lift closed
forms, interlacing, and the inertia (Cvetkovic) bound.

All eigen-solving stays on one symmetric code path: quotient matrices are
symmetrized with D^{1/2} Q D^{-1/2} before calling the dense solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphTooLargeError, PropertyViolationError
from .graphs import QuotientMatrix, VertexPartition, equitable_check

SPECTRUM_GUARD = 2000
DEFAULT_ZERO_TOL_SCALE = 1e-8


@dataclass
class Spectrum:
    """Sorted real eigenvalues with a sign-classification threshold."""

    eigenvalues: np.ndarray
    zero_tol: float = 0.0

    def __post_init__(self):
        self.eigenvalues = np.sort(np.asarray(self.eigenvalues, dtype=float))
        if self.zero_tol <= 0.0:
            rho = float(np.max(np.abs(self.eigenvalues))) if self.size else 0.0
            self.zero_tol = DEFAULT_ZERO_TOL_SCALE * max(1.0, rho)

    @property
    def size(self):
        return len(self.eigenvalues)

    @property
    def inertia(self):
        """(n_minus, n_zero, n_plus) under zero_tol."""
        neg = int(np.sum(self.eigenvalues < -self.zero_tol))
        pos = int(np.sum(self.eigenvalues > self.zero_tol))
        return neg, self.size - neg - pos, pos

    @property
    def radius(self):
        return float(np.max(np.abs(self.eigenvalues))) if self.size else 0.0

    def descending(self):
        return self.eigenvalues[::-1]


def _adjacency_matrix(g):
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def adjacency_spectrum(g, zero_tol=0.0, force=False):
    if g.n > SPECTRUM_GUARD and not force:
        raise GraphTooLargeError(
            f"spectrum guard {SPECTRUM_GUARD} exceeded (n={g.n})")
    return Spectrum(np.linalg.eigvalsh(_adjacency_matrix(g)), zero_tol)


def laplacian_spectrum(g, zero_tol=0.0, force=False):
    if g.n > SPECTRUM_GUARD and not force:
        raise GraphTooLargeError(
            f"spectrum guard {SPECTRUM_GUARD} exceeded (n={g.n})")
    a = _adjacency_matrix(g)
    lap = np.diag(a.sum(axis=1)) - a
    return Spectrum(np.linalg.eigvalsh(lap), zero_tol)


def quotient_spectrum(q, zero_tol=0.0, tol=1e-9):
    """Eigenvalues of a quotient matrix via D^{1/2} symmetrization.

    Requires weighted symmetry size_i * q_ij = size_j * q_ji on the
    off-diagonal entries.
    """
    b = np.asarray(q.entries, dtype=float)
    sizes = np.asarray(q.class_sizes, dtype=float)
    for i in range(q.dim):
        for j in range(q.dim):
            if abs(sizes[i] * b[i, j] - sizes[j] * b[j, i]) > tol * max(
                    1.0, abs(sizes[i] * b[i, j])):
                raise ValueError(
                    f"weighted symmetry violated at ({i},{j})")
    d = np.sqrt(sizes)
    sym = (d[:, None] * b) / d[None, :]
    sym = (sym + sym.T) / 2.0
    return Spectrum(np.linalg.eigvalsh(sym), zero_tol)


def spectrum_contains(outer, values, tol=1e-8):
    """True iff every value occurs in the outer spectrum within tol,
    respecting multiplicities."""
    pool = list(outer.eigenvalues)
    for v in sorted(values):
        best = min(range(len(pool)), key=lambda i: abs(pool[i] - v),
                   default=None)
        if best is None or abs(pool[best] - v) > tol:
            return False
        pool.pop(best)
    return True


def interlacing_check(inner, outer, tol=1e-9):
    """Cauchy interlacing: with eigenvalues in descending order,
    outer_i >= inner_i >= outer_{i + N - m} for all i."""
    mu = inner.descending()
    lam = outer.descending()
    m, n = len(mu), len(lam)
    if m > n:
        raise ValueError("inner spectrum larger than outer")
    for i in range(m):
        if not (lam[i] >= mu[i] - tol and mu[i] >= lam[i + n - m] - tol):
            return False
    return True


# -- voltage lift of the 2-supertoken of odd cycles ---------------------------

def voltage_Bstar(n, r):
    """Real symmetric tridiagonal block of the Z_n lift, for odd n.

    kappa = (n+1)/2; off-diagonals 2cos(r pi / n); zero diagonal except the
    bottom-right corner 2(-1)^r cos(r pi / n).
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"voltage block needs odd n >= 3, got {n}")
    if not 0 <= r < n:
        raise ValueError(f"character index r={r} out of range [0, {n})")
    kappa = (n + 1) // 2
    c = 2.0 * math.cos(r * math.pi / n)
    mat = np.zeros((kappa, kappa))
    for i in range(kappa - 1):
        mat[i, i + 1] = mat[i + 1, i] = c
    mat[kappa - 1, kappa - 1] = (-1) ** r * c
    return mat


def supertoken2_cycle_eigs(n):
    """Closed-form spectrum of the 2-supertoken of an odd cycle.

    Yields (r, k, lambda) with
    lambda(r, k) = 4 (-1)^{r+1} cos(r pi / n) cos(2 k pi / (n+2)),
    r = 0..n-1, k = 1..ceil(n/2); the multiset equals the adjacency
    spectrum of the constructed graph.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"closed form needs odd n >= 3, got {n}")
    out = []
    for r in range(n):
        for k in range(1, (n + 1) // 2 + 1):
            lam = (4.0 * (-1) ** (r + 1) * math.cos(r * math.pi / n)
                   * math.cos(2 * k * math.pi / (n + 2)))
            out.append((r, k, lam))
    return out


def monotonicity_report(n):
    """Per-character monotonicity and sign counts of the closed form.

    For each r, checks lambda(r, .) is monotone over k and accumulates the
    inertia counts used in the Cvetkovic step.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"report needs odd n >= 3, got {n}")
    rows = {}
    n_pos = n_neg = n_zero = 0
    for r in range(n):
        if abs(math.cos(r * math.pi / n)) < 1e-12:
            raise PropertyViolationError(
                f"degenerate cos(r pi / n) = 0 at r={r} for odd n={n}")
        vals = [lam for (rr, k, lam) in supertoken2_cycle_eigs(n) if rr == r]
        diffs = [b - a for a, b in zip(vals, vals[1:])]
        monotone = all(d >= 0 for d in diffs) or all(d <= 0 for d in diffs)
        pos = sum(1 for v in vals if v > 1e-12)
        neg = sum(1 for v in vals if v < -1e-12)
        rows[r] = {"monotone": monotone, "positive": pos, "negative": neg}
        n_pos += pos
        n_neg += neg
        n_zero += len(vals) - pos - neg
    return {"n": n, "rows": rows,
            "inertia": (n_neg, n_zero, n_pos)}


def cvetkovic_bound(spectrum):
    """Inertia bound on the independence number: N - max(n_plus, n_minus)."""
    neg, _, pos = spectrum.inertia
    return spectrum.size - max(pos, neg)


# -- p-augmented 2-token graphs: quotients and closed forms --------------------

def augmented_odd_eigs(n, p):
    """Quotient eigenvalues of the p-augmented 2-token graph of an odd cycle:
    4 cos((2i-1) pi / (n+2p)), i = 1..floor(n/2)+p."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"closed form needs odd n >= 3, got {n}")
    if p < 0:
        raise ValueError("p must be >= 0")
    dim = n // 2 + p
    return [4.0 * math.cos((2 * i - 1) * math.pi / (n + 2 * p))
            for i in range(1, dim + 1)]


def augmented_odd_eigvecs(n, p):
    """Eigenvectors matching augmented_odd_eigs, entry
    v_i(j) = cos((2i-1)(2j-1) pi / (2(n+2p)))."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"closed form needs odd n >= 3, got {n}")
    dim = n // 2 + p
    return [
        np.array([math.cos((2 * i - 1) * (2 * j - 1) * math.pi
                           / (2 * (n + 2 * p)))
                  for j in range(1, dim + 1)])
        for i in range(1, dim + 1)
    ]


def augmented_cyclic_partition(n, p):
    """Rotation-orbit partition of the p-augmented 2-token graph of C_n.

    Classes run along the tridiagonal chain: layer-0 pair classes from the
    largest cycle distance down to distance 1, then the added layers 1..p.
    Class sizes are n, except the antipodal class for even n (size n/2).
    Matches the vertex order of augmented_two_token_cycle.
    """
    from itertools import combinations

    index = {}
    pos = 0
    for i, j in combinations(range(n), 2):
        index[(i, j, 0)] = pos
        pos += 1
    for layer in range(1, p + 1):
        for i in range(n):
            if layer % 2 == 1:
                index[(i, i, layer)] = pos
            else:
                a, b = i, (i + 1) % n
                index[(min(a, b), max(a, b), layer)] = pos
            pos += 1

    classes = []
    for d in range(n // 2, 0, -1):
        cls = set()
        for i in range(n):
            j = (i + d) % n
            cls.add(index[(min(i, j), max(i, j), 0)])
        classes.append(sorted(cls))
    for layer in range(1, p + 1):
        cls = set()
        for i in range(n):
            if layer % 2 == 1:
                cls.add(index[(i, i, layer)])
            else:
                a, b = i, (i + 1) % n
                cls.add(index[(min(a, b), max(a, b), layer)])
        classes.append(sorted(cls))
    return VertexPartition(classes)


def augmented_quotient(n, p, graph=None):
    """Quotient matrix of the rotation-orbit partition of F_2^p(C_n).

    Certified equitable against the constructed graph (built on demand when
    ``graph`` is not supplied).  Odd n: tridiagonal 2s with top-left corner
    2; even n: first row (0, 4, 0, ...), remaining tridiagonal 2s.
    """
    from .constructions import augmented_two_token_cycle

    if graph is None:
        graph = augmented_two_token_cycle(n, p)
    part = augmented_cyclic_partition(n, p)
    q = equitable_check(graph, part)
    if q is None:
        raise PropertyViolationError(
            f"rotation-orbit partition of F_2^{p}(C_{n}) is not equitable")
    return q


def phi_eval(r, x):
    """Characteristic polynomial of the even-n quotient chain, by the
    three-term recurrence phi_r = x phi_{r-1} - 4 phi_{r-2}."""
    if r < 2:
        raise ValueError(f"recurrence defined for r >= 2, got {r}")
    prev = x * x - 8.0          # phi_2
    if r == 2:
        return prev
    cur = x ** 3 - 12.0 * x     # phi_3
    for _ in range(4, r + 1):
        prev, cur = cur, x * cur - 4.0 * prev
    return cur


def phi_max_root(r, tol=1e-12):
    """Largest root of phi_r: the spectral radius of the even-n quotient.

    Roots lie in (-4, 4); the largest is isolated by a downward grid scan
    from 4 followed by bisection on the sign change.
    """
    hi = 4.0
    step = 1e-3
    x = hi
    fx = phi_eval(r, x)
    while x > 0.0:
        nxt = x - step
        fn = phi_eval(r, nxt)
        if fx > 0.0 >= fn or fx >= 0.0 > fn or (fx > 0.0 and fn <= 0.0):
            lo, hi = nxt, x
            break
        x, fx = nxt, fn
    else:
        raise PropertyViolationError(f"no sign change found for phi_{r}")
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if hi - lo < tol:
            break
        if phi_eval(r, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2.0
