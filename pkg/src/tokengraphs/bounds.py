"""Closed-form independence bounds, exact formulas, and information rates.

All counting is exact big-integer arithmetic; the only floating point here
is the final log in information_rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import FormulaInconsistencyError, GraphTooLargeError
from .graphs import bipartition

PARTITION_CHI_GUARD = 8
PARTITION_K_GUARD = 5


@dataclass
class ColorClassPartition:
    """A proper coloring plus a grouping of its color classes.

    ``coloring`` maps vertex -> color in 0..chi-1.  ``groups`` is a list of
    groups; each group is a list of (color index, tokens) pairs whose token
    counts are positive and sum to k.  Every color class must appear in
    exactly one group and groups may hold at most k classes.
    """

    coloring: list
    groups: list
    k: int

    @property
    def chi(self):
        return max(self.coloring) + 1 if self.coloring else 0

    def class_sizes(self):
        sizes = [0] * self.chi
        for c in self.coloring:
            sizes[c] += 1
        return sizes

    def validate(self, g=None):
        chi = self.chi
        if self.k < 1:
            raise ValueError("token count k must be >= 1")
        seen = set()
        for group in self.groups:
            if not 1 <= len(group) <= self.k:
                raise ValueError(
                    f"group size {len(group)} outside [1, k={self.k}]")
            total = 0
            for ci, pi in group:
                if not 0 <= ci < chi:
                    raise ValueError(f"color index {ci} out of range")
                if ci in seen:
                    raise ValueError(f"color class {ci} in two groups")
                seen.add(ci)
                if pi < 1:
                    raise ValueError("token counts per class must be >= 1")
                total += pi
            if total != self.k:
                raise ValueError(
                    f"group tokens sum to {total}, expected k={self.k}")
        if seen != set(range(chi)):
            raise ValueError("groups must cover every color class exactly once")
        sigma = len(self.groups)
        if not math.ceil(chi / self.k) <= sigma <= chi:
            raise ValueError(f"sigma={sigma} outside [ceil(chi/k), chi]")
        if g is not None:
            if len(self.coloring) != g.n:
                raise ValueError("coloring length must equal vertex count")
            for u, v in g.edges():
                if self.coloring[u] == self.coloring[v]:
                    raise ValueError(f"coloring not proper on edge ({u},{v})")


def partition_bound(p):
    """Independence lower bound for the k-supertoken from a class grouping.

    Each group contributes the product over its classes of
    C(class size + tokens - 1, tokens); groups are summed.
    """
    p.validate()
    sizes = p.class_sizes()
    total = 0
    for group in p.groups:
        prod = 1
        for ci, pi in group:
            prod *= comb(sizes[ci] + pi - 1, pi)
        total += prod
    return total


def _compositions(k, parts):
    """All tuples of ``parts`` positive integers summing to k."""
    if parts == 1:
        yield (k,)
        return
    for first in range(1, k - parts + 2):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def _set_partitions(items, max_block):
    """All set partitions of ``items`` with block size <= max_block."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for size in range(0, min(max_block - 1, len(rest)) + 1):
        for chosen in combinations(rest, size):
            block = [head] + list(chosen)
            remaining = [x for x in rest if x not in chosen]
            for tail in _set_partitions(remaining, max_block):
                yield [block] + tail


def _best_group(sizes, classes, k):
    """Best composition of k tokens over the given classes: (value, group)."""
    best_val, best_group = -1, None
    for compo in _compositions(k, len(classes)):
        val = 1
        for ci, pi in zip(classes, compo):
            val *= comb(sizes[ci] + pi - 1, pi)
        if val > best_val:
            best_val = val
            best_group = [(ci, pi) for ci, pi in zip(classes, compo)]
    return best_val, best_group


def best_partition_bound(g, coloring, k, chi_guard=PARTITION_CHI_GUARD,
                         k_guard=PARTITION_K_GUARD, force=False):
    """Maximum partition bound over all class groupings, with a witness.

    Exhaustive: every set partition of the color classes into blocks of at
    most k classes, times every positive composition of k per block.
    """
    chi = max(coloring) + 1 if coloring else 0
    if (chi > chi_guard or k > k_guard) and not force:
        raise GraphTooLargeError(
            f"partition enumeration guard exceeded (chi={chi}, k={k}); "
            "pass force=True to override")
    probe = ColorClassPartition(list(coloring), [[(c, k)] for c in range(chi)], k)
    sizes = probe.class_sizes()
    best_val, best_groups = -1, None
    for blocks in _set_partitions(list(range(chi)), min(k, chi)):
        total, groups = 0, []
        for block in blocks:
            val, group = _best_group(sizes, block, k)
            total += val
            groups.append(group)
        if total > best_val:
            best_val, best_groups = total, groups
    out = ColorClassPartition(list(coloring), best_groups, k)
    out.validate(g)
    return best_val, out


def best_bound_by_profile(g, coloring, k, force=False):
    """Best partition bound per sorted block-size profile, e.g. (3, 1, 1)."""
    chi = max(coloring) + 1 if coloring else 0
    if (chi > PARTITION_CHI_GUARD or k > PARTITION_K_GUARD) and not force:
        raise GraphTooLargeError("partition enumeration guard exceeded")
    probe = ColorClassPartition(list(coloring), [[(c, k)] for c in range(chi)], k)
    sizes = probe.class_sizes()
    table = {}
    for blocks in _set_partitions(list(range(chi)), min(k, chi)):
        profile = tuple(sorted((len(b) for b in blocks), reverse=True))
        total = sum(_best_group(sizes, block, k)[0] for block in blocks)
        if total > table.get(profile, -1):
            table[profile] = total
    return table


def partition_witness(p):
    """The explicit independent set of token configurations behind the bound.

    For each group, places exactly its per-class token counts inside the
    color classes (with repetition) and nothing elsewhere.  Returns counts
    vectors; cardinality equals partition_bound(p).
    """
    p.validate()
    n = len(p.coloring)
    classes = [[] for _ in range(p.chi)]
    for v, c in enumerate(p.coloring):
        classes[c].append(v)
    witness = []
    for group in p.groups:
        per_class = [
            list(combinations_with_replacement(classes[ci], pi))
            for ci, pi in group
        ]
        stack = [([], 0)]
        while stack:
            acc, depth = stack.pop()
            if depth == len(per_class):
                counts = [0] * n
                for v in acc:
                    counts[v] += 1
                witness.append(tuple(counts))
                continue
            for pick in reversed(per_class[depth]):
                stack.append((acc + list(pick), depth + 1))
    return witness


# -- bipartite bound ----------------------------------------------------------

def bipartite_bound(c1, c2, k):
    """Independence lower bound for the k-supertoken of a bipartite graph:
    configurations with an even token count on the C1 side."""
    if c1 < 1 or c2 < 1:
        raise ValueError("part sizes must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    return sum(comb(c1 + 2 * i - 1, 2 * i) * comb(c2 + k - 2 * i - 1, k - 2 * i)
               for i in range(k // 2 + 1))


def bipartite_stable_sets(g, k, parts=None):
    """Stable bipartition (S1, S2) of the k-supertoken of bipartite g.

    S1 holds configurations with an odd token count in C1, S2 the even ones.
    Returns vertex index sets in supertoken rank order; |S2| equals
    bipartite_bound(|C1|, |C2|, k).
    """
    from .constructions import num_configs, unrank_config

    if parts is None:
        parts = bipartition(g)
        if parts is None:
            raise ValueError("graph is not bipartite")
    c1 = set(parts[0])
    s1, s2 = set(), set()
    for r in range(num_configs(g.n, k)):
        counts = unrank_config(r, g.n, k)
        on_c1 = sum(counts[v] for v in c1)
        (s1 if on_c1 % 2 else s2).add(r)
    return s1, s2


# -- 2-supertoken of cycles: exact values -------------------------------------

def alpha_supertoken2_cycle(n):
    """Exact independence number of the 2-supertoken of C_n, n >= 2."""
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    r, rem = divmod(n, 4)
    if rem in (0, 1):
        return r * (n + 2)
    return (r + 1) * n


def independent_set_2cycle(n):
    """The explicit maximum independent set of the 2-supertoken of C_n.

    Construction (a) for n = 4r, 4r+1; construction (b) for n = 4r+2, 4r+3.
    Returns counts vectors; duplicates from wrap-around collapse, and the
    final cardinality must equal alpha_supertoken2_cycle(n).
    """
    if n < 4:
        raise ValueError(f"needs n >= 4, got {n}")
    r, rem = divmod(n, 4)
    pairs = set()
    if rem in (0, 1):
        for i in range(n):
            for j in range(r):
                pairs.add(frozenset((i, (i + 2 * j) % n)) if i != (i + 2 * j) % n
                          else frozenset((i,)))
        for i in range(2 * r):
            b = (i + 2 * r) % n
            pairs.add(frozenset((i, b)) if i != b else frozenset((i,)))
    else:
        for i in range(n):
            for j in range(r + 1):
                b = (i + 2 * j) % n
                pairs.add(frozenset((i, b)) if i != b else frozenset((i,)))
    out = set()
    for pair in pairs:
        counts = [0] * n
        if len(pair) == 1:
            (v,) = pair
            counts[v] = 2
        else:
            u, v = pair
            counts[u] = counts[v] = 1
        out.add(tuple(counts))
    expected = alpha_supertoken2_cycle(n)
    if len(out) != expected:
        raise FormulaInconsistencyError(
            f"construction for n={n} yields {len(out)} configs, "
            f"expected {expected}")
    return out


def alpha_augmented(n, p):
    """Exact independence number of the p-augmented 2-token graph of C_n.

    Piecewise by n mod 4 and the parity of p; evaluated as an exact
    rational and asserted integral.
    """
    if n < 3:
        raise ValueError(f"needs n >= 3, got {n}")
    if p < 0:
        raise ValueError(f"needs p >= 0, got {p}")
    r, rem = divmod(n, 4)
    half_p = Fraction(p, 2)
    if rem == 0:
        val = (r + half_p) * n
    elif rem == 1:
        val = (r + half_p) * n
        if p % 2 == 1:
            val -= Fraction(1, 2)
    elif rem == 2:
        val = (r + half_p + Fraction(1, 2)) * n
    else:
        val = (r + half_p + Fraction(1, 2)) * n
        if p % 2 == 0:
            val -= Fraction(1, 2)
    if val.denominator != 1:
        raise FormulaInconsistencyError(
            f"alpha formula for (n={n}, p={p}) is non-integral: {val}")
    return int(val)


# -- information rates ---------------------------------------------------------

def information_rate(alpha_value, k):
    """Bits per symbol achievable with error-free multiset codes of length k."""
    if alpha_value < 1:
        raise ValueError("alpha must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    return math.log2(alpha_value) / k


def shannon_lower_bound(p):
    """Shannon-capacity lower bound of the k-supertoken: the partition bound."""
    return partition_bound(p)


def bipartite_row(c, k_max):
    """Bipartite-bound row for the cycle on 2c vertices, k = 0..k_max."""
    if c < 1:
        raise ValueError("c must be >= 1")
    return [bipartite_bound(c, c, k) for k in range(k_max + 1)]
