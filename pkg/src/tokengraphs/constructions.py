"""Generalized token-graph constructions.

A token configuration on a base graph with n vertices is a length-n vector
of non-negative counts summing to k.  Its canonical label is the sorted
multiset of occupied vertices ("0,0,3" places two tokens on vertex 0 and one
on vertex 3).  All constructions emit vertices in the rank order defined
here, so spectra and golden files are reproducible.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import GraphTooLargeError
from .graphs import Graph

SIZE_GUARD = 100_000  # default vertex-count guard for constructions


def _check_guard(nv, force, what):
    if nv > SIZE_GUARD and not force:
        raise GraphTooLargeError(
            f"{what} would have {nv} vertices (> {SIZE_GUARD}); "
            "pass force=True to override")


# -- configuration ranking ---------------------------------------------------
#
# Configurations are ordered colexicographically on the sorted multiset
# (v_1 <= ... <= v_k) via the combinatorial number system for multisets:
# rank = sum_i C(v_i + i - 1, i).

def num_configs(n, k):
    """Number of k-token configurations on n vertices: C(n+k-1, k)."""
    return comb(n + k - 1, k)


def multiset_to_counts(ms, n):
    counts = [0] * n
    for v in ms:
        counts[v] += 1
    return tuple(counts)


def counts_to_multiset(counts):
    ms = []
    for v, c in enumerate(counts):
        ms.extend([v] * c)
    return tuple(ms)


def config_label(counts):
    return ",".join(str(v) for v in counts_to_multiset(counts))


def rank_config(counts):
    """Colex rank of a configuration among all with the same n and k."""
    ms = counts_to_multiset(counts)
    return sum(comb(v + i, i + 1) for i, v in enumerate(ms))


def unrank_config(rank, n, k):
    """Inverse of rank_config; returns a counts vector of length n."""
    total = num_configs(n, k)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range [0, {total}) for n={n}, k={k}")
    ms = [0] * k
    r = rank
    for i in range(k, 0, -1):
        v = n - 1
        while comb(v + i - 1, i) > r:
            v -= 1
        ms[i - 1] = v
        r -= comb(v + i - 1, i)
    return multiset_to_counts(ms, n)


# -- supertoken and token graphs --------------------------------------------

def supertoken_graph(g, k, force=False):
    """k-supertoken graph: multisets of k tokens, one token moves per step."""
    if k < 1:
        raise ValueError(f"token count must be >= 1, got {k}")
    nv = num_configs(g.n, k)
    _check_guard(nv, force, f"supertoken of {g.name or 'graph'}")
    configs = [unrank_config(r, g.n, k) for r in range(nv)]
    edges = set()
    for r, counts in enumerate(configs):
        for a in range(g.n):
            if counts[a] == 0:
                continue
            for b in g.adj[a]:
                moved = list(counts)
                moved[a] -= 1
                moved[b] += 1
                s = rank_config(moved)
                edges.add((min(r, s), max(r, s)))
    labels = [config_label(c) for c in configs]
    return Graph(nv, edges, labels=labels, name=f"F[{k}]({g.name})")


def token_graph(g, k, force=False):
    """k-token graph: k-subsets of vertices, one token moves per step."""
    if not 1 <= k <= g.n:
        raise ValueError(f"token graph needs 1 <= k <= n, got k={k}, n={g.n}")
    nv = comb(g.n, k)
    _check_guard(nv, force, f"token graph of {g.name or 'graph'}")
    subsets = list(combinations(range(g.n), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = set()
    for i, sub in enumerate(subsets):
        inside = set(sub)
        for a in sub:
            for b in g.adj[a]:
                if b in inside:
                    continue
                moved = tuple(sorted(inside - {a} | {b}))
                j = index[moved]
                edges.add((min(i, j), max(i, j)))
    labels = [",".join(str(v) for v in s) for s in subsets]
    return Graph(nv, edges, labels=labels, name=f"F_{k}({g.name})")


# -- products ----------------------------------------------------------------

def _product(g, h, rule, symbol, force):
    nv = g.n * h.n
    _check_guard(nv, force, f"{g.name} {symbol} {h.name}")
    idx = lambda u, v: u * h.n + v
    edges = []
    for u1 in range(g.n):
        for v1 in range(h.n):
            i = idx(u1, v1)
            for u2 in range(g.n):
                for v2 in range(h.n):
                    j = idx(u2, v2)
                    if j <= i:
                        continue
                    if rule(g, h, u1, v1, u2, v2):
                        edges.append((i, j))
    labels = [f"({g.labels[u]},{h.labels[v]})"
              for u in range(g.n) for v in range(h.n)]
    return Graph(nv, edges, labels=labels,
                 name=f"{g.name}{symbol}{h.name}")


def _strong_rule(g, h, u1, v1, u2, v2):
    return ((u1 == u2 or g.has_edge(u1, u2))
            and (v1 == v2 or h.has_edge(v1, v2)))


def _cartesian_rule(g, h, u1, v1, u2, v2):
    return ((u1 == u2 and h.has_edge(v1, v2))
            or (v1 == v2 and g.has_edge(u1, u2)))


def strong_product(g, h, force=False):
    """Strong product: coordinatewise equal-or-adjacent, not all equal."""
    return _product(g, h, _strong_rule, "x", force)


def cartesian_product(g, h, force=False):
    """Cartesian product: exactly one coordinate moves along an edge."""
    return _product(g, h, _cartesian_rule, "[]", force)


def strong_power(g, k, force=False):
    if k < 1:
        raise ValueError(f"power needs k >= 1, got {k}")
    out = g
    for _ in range(k - 1):
        out = strong_product(out, g, force=force)
    return out


def cartesian_power(g, k, force=False):
    if k < 1:
        raise ValueError(f"power needs k >= 1, got {k}")
    out = g
    for _ in range(k - 1):
        out = cartesian_product(out, g, force=force)
    return out


# -- p-augmented 2-token graphs of cycles ------------------------------------

def augmented_two_token_cycle(n, p, force=False):
    """2-token graph of C_n with p alternating extra layers.

    Layer 0 is the plain 2-token graph.  Odd layers r hold doubled vertices
    {i,i}^r joined to {i,i+1}^{r-1} and {i,i-1}^{r-1}; even layers s hold
    pair vertices {i,i+1}^s joined to {i,i}^{s-1} and {i+1,i+1}^{s-1}
    (indices mod n).  Layer 1 added to layer 0 recovers the 2-supertoken
    graph of C_n.
    """
    if n < 3:
        raise ValueError(f"augmented construction needs n >= 3, got {n}")
    if p < 0:
        raise ValueError(f"layer count must be >= 0, got {p}")
    nv = comb(n, 2) + p * n
    _check_guard(nv, force, f"augmented 2-token of C_{n}")

    index = {}
    labels = []

    def add_vertex(i, j, layer):
        key = (min(i, j), max(i, j), layer)
        if key not in index:
            index[key] = len(labels)
            labels.append(f"{{{key[0]},{key[1]}}}^{layer}")
        return index[key]

    def vid(i, j, layer):
        return index[(min(i % n, j % n), max(i % n, j % n), layer)]

    for i, j in combinations(range(n), 2):
        add_vertex(i, j, 0)
    for layer in range(1, p + 1):
        if layer % 2 == 1:
            for i in range(n):
                add_vertex(i, i, layer)
        else:
            for i in range(n):
                add_vertex(i, (i + 1) % n, layer)

    edges = set()
    # layer 0: the 2-token graph of the cycle
    for i, j in combinations(range(n), 2):
        u = vid(i, j, 0)
        for a, b in ((i, j), (j, i)):
            for step in (1, -1):
                c = (a + step) % n
                if c != b:
                    edges.add(tuple(sorted((u, vid(c, b, 0)))))
    # alternating layers
    for layer in range(1, p + 1):
        if layer % 2 == 1:
            for i in range(n):
                u = vid(i, i, layer)
                edges.add(tuple(sorted((u, vid(i, i + 1, layer - 1)))))
                edges.add(tuple(sorted((u, vid(i, i - 1, layer - 1)))))
        else:
            for i in range(n):
                u = vid(i, i + 1, layer)
                edges.add(tuple(sorted((u, vid(i, i, layer - 1)))))
                edges.add(tuple(sorted((u, vid(i + 1, i + 1, layer - 1)))))

    return Graph(nv, edges, labels=labels, name=f"F_2^{p}(C_{n})")


# -- embeddings ---------------------------------------------------------------

def embed_supertoken(g, k, anchor, force=False):
    """Vertex map from the k-supertoken into the (k+1)-supertoken of g.

    Sends each configuration c to c + one extra token on ``anchor``.
    Returns a list: image index for each rank of the k-supertoken.
    """
    if not 0 <= anchor < g.n:
        raise ValueError(f"anchor vertex {anchor} out of range")
    nv = num_configs(g.n, k)
    _check_guard(nv, force, "supertoken embedding")
    out = []
    for r in range(nv):
        counts = list(unrank_config(r, g.n, k))
        counts[anchor] += 1
        out.append(rank_config(counts))
    return out


def embed_token(g, k, force=False):
    """Vertex map from the k-token graph into the k-supertoken of g.

    The identity on 0/1 configurations: subset index -> configuration rank.
    """
    nv = comb(g.n, k)
    _check_guard(nv, force, "token embedding")
    out = []
    for sub in combinations(range(g.n), k):
        out.append(rank_config(multiset_to_counts(sub, g.n)))
    return out


def is_induced_embedding(inner, outer, vmap):
    """True iff vmap maps inner onto an induced subgraph of outer."""
    if len(set(vmap)) != inner.n:
        return False
    for u in range(inner.n):
        for v in range(u + 1, inner.n):
            if inner.has_edge(u, v) != outer.has_edge(vmap[u], vmap[v]):
                return False
    return True
