"""Exact, certificate-producing solvers for graph invariants.

Every solver returns a Certificate whose witness can be verified against the
graph independently of the search (see verify_certificate).  Tie-breaking is
lowest vertex index first throughout, so certificates are reproducible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphTooLargeError, PropertyViolationError
from .graphs import bfs_distances, bipartition

ALPHA_GUARD = 120   # independence / clique vertex-count guard
CHROMATIC_GUARD = 80
METRIC_GUARD = 16


@dataclass
class Certificate:
    """An invariant value plus a verifiable witness."""

    kind: str        # independent-set | clique | coloring | matching | resolving-set
    value: int
    witness: object  # vertex list, edge list, or color assignment


def verify_certificate(g, cert):
    """Check a certificate against its graph; raises on any violation."""
    if cert.kind == "independent-set":
        s = cert.witness
        if len(s) != cert.value or len(set(s)) != len(s):
            raise PropertyViolationError("independent-set witness size mismatch")
        for u, v in combinations(s, 2):
            if g.has_edge(u, v):
                raise PropertyViolationError(f"witness contains edge ({u},{v})")
    elif cert.kind == "clique":
        s = cert.witness
        if len(s) != cert.value or len(set(s)) != len(s):
            raise PropertyViolationError("clique witness size mismatch")
        for u, v in combinations(s, 2):
            if not g.has_edge(u, v):
                raise PropertyViolationError(f"witness misses edge ({u},{v})")
    elif cert.kind == "coloring":
        colors = cert.witness
        if len(colors) != g.n or len(set(colors)) != cert.value:
            raise PropertyViolationError("coloring witness size mismatch")
        for u, v in g.edges():
            if colors[u] == colors[v]:
                raise PropertyViolationError(f"edge ({u},{v}) monochromatic")
    elif cert.kind == "matching":
        seen = set()
        for u, v in cert.witness:
            if not g.has_edge(u, v):
                raise PropertyViolationError(f"({u},{v}) not an edge")
            if u in seen or v in seen:
                raise PropertyViolationError("matching not vertex-disjoint")
            seen.update((u, v))
        if len(cert.witness) != cert.value:
            raise PropertyViolationError("matching witness size mismatch")
    elif cert.kind == "resolving-set":
        s = cert.witness
        vectors = set()
        for v in range(g.n):
            vec = tuple(bfs_distances(g, w)[v] for w in s)
            if vec in vectors:
                raise PropertyViolationError("resolving set does not resolve")
            vectors.add(vec)
    else:
        raise ValueError(f"unknown certificate kind: {cert.kind}")
    return True


# -- maximum clique / independent set -----------------------------------------

def _max_clique_masks(n, bits):
    """Branch and bound with greedy-coloring bounds on bitset adjacency."""
    best_size = 0
    best_set = 0

    def expand(clique_size, clique_mask, cand):
        nonlocal best_size, best_set
        if cand == 0:
            if clique_size > best_size:
                best_size, best_set = clique_size, clique_mask
            return
        # greedy coloring of the candidates, lowest index first
        colored = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                colored.append((v, color))
                uncolored &= ~(1 << v)
                avail &= ~(bits[v] | (1 << v))
        for v, c in reversed(colored):
            if clique_size + c <= best_size:
                return
            expand(clique_size + 1, clique_mask | (1 << v), cand & bits[v])
            cand &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return [v for v in range(n) if best_set >> v & 1]


def _guard(g, guard, force, what):
    if g.n > guard and not force:
        raise GraphTooLargeError(
            f"{what} guard {guard} exceeded (n={g.n}); pass force=True to override")


def clique_number(g, force=False, guard=ALPHA_GUARD):
    """Maximum clique via branch and bound with coloring bounds."""
    _guard(g, guard, force, "clique")
    if g.n == 0:
        return Certificate("clique", 0, [])
    witness = _max_clique_masks(g.n, g.bits)
    cert = Certificate("clique", len(witness), sorted(witness))
    verify_certificate(g, cert)
    return cert


def independence_number(g, force=False, guard=ALPHA_GUARD, method="branch"):
    """Maximum independent set, exact.

    ``method="branch"`` runs clique search on the complement;
    ``method="konig"`` uses alpha = n - max matching (bipartite input only).
    """
    _guard(g, guard, force, "independence")
    if method == "konig":
        parts = bipartition(g)
        if parts is None:
            raise ValueError("konig method needs a bipartite graph")
        c1, c2 = parts
        matching = max_bipartite_matching(g, c1, c2).witness
        matched = {u for e in matching for u in e}
        # alternating-path construction of a maximum independent set
        side2 = set(c2)
        reach = set(u for u in c1 if u not in matched)
        frontier = list(reach)
        mate = {}
        for u, v in matching:
            mate[u], mate[v] = v, u
        while frontier:
            u = frontier.pop()
            for v in g.adj[u]:
                if v in side2 and v not in reach:
                    reach.add(v)
                    w = mate.get(v)
                    if w is not None and w not in reach:
                        reach.add(w)
                        frontier.append(w)
        # König: vertex cover = (C1 \ reach) + (C2 & reach)
        cover = {u for u in c1 if u not in reach} | {v for v in c2 if v in reach}
        witness = sorted(set(range(g.n)) - cover)
        cert = Certificate("independent-set", len(witness), witness)
        verify_certificate(g, cert)
        return cert
    if g.n == 0:
        return Certificate("independent-set", 0, [])
    witness = _max_clique_masks(g.n, g.complement_bits())
    cert = Certificate("independent-set", len(witness), sorted(witness))
    verify_certificate(g, cert)
    return cert


# -- chromatic number ----------------------------------------------------------

def _dsatur_greedy(g):
    """Greedy coloring by saturation degree; returns (colors, count)."""
    colors = [-1] * g.n
    neighbor_colors = [set() for _ in range(g.n)]
    for _ in range(g.n):
        u = max((v for v in range(g.n) if colors[v] < 0),
                key=lambda v: (len(neighbor_colors[v]), g.degree(v), -v))
        c = 0
        while c in neighbor_colors[u]:
            c += 1
        colors[u] = c
        for w in g.adj[u]:
            neighbor_colors[w].add(c)
    return colors, max(colors) + 1 if g.n else 0


def _k_colorable(g, k):
    """Backtracking k-colorability with DSATUR vertex selection."""
    colors = [-1] * g.n
    neighbor_colors = [set() for _ in range(g.n)]

    def pick():
        best, key = -1, None
        for v in range(g.n):
            if colors[v] >= 0:
                continue
            kv = (len(neighbor_colors[v]), g.degree(v), -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def backtrack(colored, max_used):
        if colored == g.n:
            return True
        v = pick()
        if len(neighbor_colors[v]) >= k:
            return False
        # symmetry breaking: allow at most one brand-new color
        for c in range(min(max_used + 1, k)):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            touched = [w for w in g.adj[v]
                       if colors[w] < 0 and c not in neighbor_colors[w]]
            for w in touched:
                neighbor_colors[w].add(c)
            if backtrack(colored + 1, max(max_used, c + 1)):
                return True
            for w in touched:
                neighbor_colors[w].discard(c)
            colors[v] = -1
        return False

    if backtrack(0, 0):
        return list(colors)
    return None


def chromatic_number(g, force=False, guard=CHROMATIC_GUARD):
    """Exact chromatic number: clique lower bound, DSATUR upper bound,
    then iterative k-colorability backtracking."""
    _guard(g, guard, force, "chromatic")
    if g.n == 0:
        return Certificate("coloring", 0, [])
    if g.m == 0:
        return Certificate("coloring", 1, [0] * g.n)
    if bipartition(g) is not None:
        side = [0] * g.n
        c1, c2 = bipartition(g)
        for v in c2:
            side[v] = 1
        cert = Certificate("coloring", 2, side)
        verify_certificate(g, cert)
        return cert
    lb = max(3, clique_number(g, force=True).value)
    greedy, ub = _dsatur_greedy(g)
    for k in range(lb, ub):
        sol = _k_colorable(g, k)
        if sol is not None:
            cert = Certificate("coloring", k, sol)
            verify_certificate(g, cert)
            return cert
    cert = Certificate("coloring", ub, greedy)
    verify_certificate(g, cert)
    return cert


# -- bipartite matching and Hall's condition -----------------------------------

def _validate_bipartition(g, c1, c2):
    s1, s2 = set(c1), set(c2)
    if s1 & s2:
        raise ValueError("bipartition parts overlap")
    if s1 | s2 != set(range(g.n)):
        raise ValueError("bipartition does not cover the vertex set")
    for u, v in g.edges():
        if (u in s1) == (v in s1):
            raise ValueError(f"edge ({u},{v}) inside one part")


def max_bipartite_matching(g, c1, c2):
    """Maximum matching of C1 into C2 via augmenting paths."""
    _validate_bipartition(g, c1, c2)
    mate = {}  # vertex -> matched partner, both directions

    def try_augment(u, seen):
        for v in g.adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in mate or try_augment(mate[v], seen):
                mate[u], mate[v] = v, u
                return True
        return False

    size = 0
    for u in sorted(c1):
        if try_augment(u, set()):
            size += 1
    witness = sorted((u, mate[u]) for u in c1 if u in mate)
    cert = Certificate("matching", size, witness)
    verify_certificate(g, cert)
    return cert


def hall_degree_condition(g, c1, c2, delta):
    """True iff min degree over C1 >= delta and max degree over C2 <= delta.

    Under this condition a matching saturating C1 exists, so for bipartite g
    with |C1| <= |C2| the independence number equals |C2|.
    """
    _validate_bipartition(g, c1, c2)
    return (all(g.degree(u) >= delta for u in c1)
            and all(g.degree(v) <= delta for v in c2))


# -- metric dimension ----------------------------------------------------------

def metric_dimension(g, force=False, guard=METRIC_GUARD):
    """Minimum resolving set by exhaustive search over subset sizes."""
    _guard(g, guard, force, "metric dimension")
    dist = [bfs_distances(g, v) for v in range(g.n)]
    if g.n <= 1:
        return Certificate("resolving-set", 0, [])
    for size in range(1, g.n):
        for subset in combinations(range(g.n), size):
            vectors = {tuple(dist[w][v] for w in subset) for v in range(g.n)}
            if len(vectors) == g.n:
                cert = Certificate("resolving-set", size, list(subset))
                verify_certificate(g, cert)
                return cert
    return Certificate("resolving-set", g.n, list(range(g.n)))


# -- clique types in supertoken graphs -----------------------------------------

def config_adjacent(g, a, b):
    """Adjacency of two token multisets: one token moves along an edge of g."""
    ca, cb = Counter(a), Counter(b)
    gained = list((cb - ca).elements())
    lost = list((ca - cb).elements())
    return (len(gained) == 1 and len(lost) == 1
            and g.has_edge(lost[0], gained[0]))


def _classify_multisets(members):
    """Type tag for a clique of token multisets, or None."""
    counters = [Counter(m) for m in members]
    k = len(members[0])
    inter = counters[0].copy()
    for c in counters[1:]:
        inter &= c
    if sum(inter.values()) == k - 1:
        return "type1"
    union = counters[0] | counters[1]
    if all(c <= union for c in counters):
        return "type2"
    return None


def _project_clique(members, kind):
    counters = [Counter(m) for m in members]
    if kind == "type1":
        inter = counters[0].copy()
        for c in counters[1:]:
            inter &= c
        moving = [list((c - inter).elements()) for c in counters]
    else:
        union = counters[0].copy()
        for c in counters[1:]:
            union |= c
        moving = [list((union - c).elements()) for c in counters]
    if any(len(mv) != 1 for mv in moving):
        raise PropertyViolationError("clique does not project to single vertices")
    proj = tuple(sorted(mv[0] for mv in moving))
    if len(set(proj)) != len(proj):
        raise PropertyViolationError("projected vertices are not distinct")
    return proj


def classify_triangle(g, a, b, c):
    """Classify a triple of token multisets of the supertoken graph of g.

    Returns (kind, projected) where kind is "type1", "type2", or
    "not-a-triangle"; projected is the 3-clique of g behind the triangle.
    """
    members = [tuple(sorted(a)), tuple(sorted(b)), tuple(sorted(c))]
    if len(set(members)) != 3:
        raise ValueError("triangle members must be distinct configurations")
    for x, y in combinations(members, 2):
        if not config_adjacent(g, x, y):
            return "not-a-triangle", None
    kind = _classify_multisets(members)
    if kind is None:
        raise PropertyViolationError(f"unclassifiable triangle {members}")
    proj = _project_clique(members, kind)
    for u, v in combinations(proj, 2):
        if not g.has_edge(u, v):
            raise PropertyViolationError(f"projection {proj} is not a clique")
    return kind, proj


def maximal_cliques(g):
    """All maximal cliques (Bron-Kerbosch with pivoting), as vertex lists."""
    n, bits = g.n, g.bits
    out = []

    def bk(r, p, x):
        if p == 0 and x == 0:
            out.append([v for v in range(n) if r >> v & 1])
            return
        pux = p | x
        pivot, best = -1, -1
        m = pux
        while m:
            u = (m & -m).bit_length() - 1
            cnt = bin(p & bits[u]).count("1")
            if cnt > best:
                best, pivot = cnt, u
            m &= m - 1
        cand = p & ~bits[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            bk(r | bit, p & bits[v], x & bits[v])
            p &= ~bit
            x |= bit
            cand &= cand - 1

    bk(0, (1 << n) - 1, 0)
    return out


def clique_type_census(f, base=None, force=False, guard=ALPHA_GUARD):
    """Classify every maximal clique of a supertoken graph by type.

    ``f`` must carry configuration labels ("0,1,3").  Returns a Counter
    keyed by (clique size, type).  With ``base`` given, each clique's
    projection is verified to be a clique of the base graph.
    """
    _guard(f, guard, force, "clique census")
    configs = [tuple(int(x) for x in lab.split(",")) for lab in f.labels]
    census = Counter()
    for clique in maximal_cliques(f):
        if len(clique) == 1:
            census[(1, "type1")] += 1
            continue
        members = [configs[v] for v in clique]
        kind = _classify_multisets(members)
        if kind is None:
            raise PropertyViolationError(
                f"maximal clique {members} fits neither type")
        if base is not None:
            proj = _project_clique(members, kind)
            if len(proj) != len(clique):
                raise PropertyViolationError(
                    f"projection size {len(proj)} != clique size {len(clique)}")
            for u, v in combinations(proj, 2):
                if not base.has_edge(u, v):
                    raise PropertyViolationError(
                        f"projection {proj} is not a clique of the base graph")
        census[(len(clique), kind)] += 1
    return census
