"""Core graph representation, standard families, and structural invariants.

Vertices are dense integer indices ``0..n-1`` with optional string labels.
A graph keeps both sorted neighbor lists (cache-friendly iteration) and a
per-vertex adjacency bitmask (O(1) adjacency tests for the solvers).
Graphs are immutable after construction.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import DisconnectedGraphError, GraphTooLargeError

ISO_GUARD = 40  # default vertex-count guard for is_isomorphic


class Graph:
    """Finite simple undirected graph with a canonical vertex order."""

    __slots__ = ("n", "name", "labels", "adj", "bits", "m")

    def __init__(self, n, edges, labels=None, name=""):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if labels is not None and len(labels) != n:
            raise ValueError("labels length must equal vertex count")
        self.n = n
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.adj = [sorted(s) for s in adj]
        self.bits = [0] * n
        for u in range(n):
            mask = 0
            for v in self.adj[u]:
                mask |= 1 << v
            self.bits[u] = mask
        self.m = sum(len(a) for a in self.adj) // 2

    def has_edge(self, u, v):
        return bool(self.bits[u] >> v & 1)

    def degree(self, u):
        return len(self.adj[u])

    def edges(self):
        """Edges as sorted (u, v) pairs with u < v, lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree_sequence(self):
        return sorted(len(a) for a in self.adj)

    def relabel(self, perm, name=None):
        """Image of the graph under vertex permutation ``perm`` (old -> new)."""
        inv = [0] * self.n
        for old, new in enumerate(perm):
            inv[new] = old
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        labels = [self.labels[inv[i]] for i in range(self.n)]
        return Graph(self.n, edges, labels=labels, name=name or self.name)

    def complement_bits(self):
        """Per-vertex non-neighbor masks (self excluded), for the solvers."""
        full = (1 << self.n) - 1
        return [full & ~(self.bits[u] | (1 << u)) for u in range(self.n)]

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
            and self.labels == other.labels
        )

    def __repr__(self):
        name = self.name or "graph"
        return f"Graph({name}: n={self.n}, m={self.m})"

    # -- serialization ----------------------------------------------------

    def to_json(self):
        """Canonical JSON text: edges with u < v, sorted lexicographically."""
        obj = {"name": self.name, "n": self.n, "labels": self.labels,
               "edges": [list(e) for e in self.edges()]}
        return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(obj["n"], [tuple(e) for e in obj["edges"]],
                   labels=obj.get("labels"), name=obj.get("name", ""))

    def to_dot(self):
        lines = [f'graph "{self.name or "G"}" {{']
        for v in range(self.n):
            lines.append(f'  {v} [label="{self.labels[v]}"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class VertexPartition:
    """Disjoint vertex classes covering 0..n-1."""

    classes: list = field(default_factory=list)

    def validate(self, g):
        seen = set()
        for cls in self.classes:
            if not cls:
                raise ValueError("partition classes must be non-empty")
            for v in cls:
                if not 0 <= v < g.n:
                    raise ValueError(f"vertex {v} out of range")
                if v in seen:
                    raise ValueError(f"vertex {v} in two classes")
                seen.add(v)
        if len(seen) != g.n:
            raise ValueError("partition does not cover the vertex set")

    @property
    def sizes(self):
        return [len(c) for c in self.classes]


@dataclass
class QuotientMatrix:
    """Quotient matrix of an equitable partition.

    ``entries[i][j]`` is the number of neighbors in class j of any vertex of
    class i (adjacency flavor) or the corresponding Laplacian entry.
    """

    entries: list
    class_sizes: list
    flavor: str = "adjacency"  # "adjacency" | "laplacian"

    @property
    def dim(self):
        return len(self.class_sizes)

    def to_laplacian(self):
        """Laplacian-flavor quotient derived from an adjacency-flavor one."""
        if self.flavor != "adjacency":
            raise ValueError("already laplacian flavor")
        d = self.dim
        ent = [[0.0] * d for _ in range(d)]
        for i in range(d):
            deg = sum(self.entries[i])
            for j in range(d):
                ent[i][j] = (deg if i == j else 0.0) - self.entries[i][j]
        return QuotientMatrix(ent, list(self.class_sizes), flavor="laplacian")


# -- standard families -----------------------------------------------------

def make_cycle(n):
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C_{n}")


def make_path(n):
    """Path P_n on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P_{n}")


def make_complete(n):
    """Complete graph K_n, n >= 1."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)],
                 name=f"K_{n}")


def make_hypercube(d):
    """d-dimensional hypercube Q_d, vertices labeled by binary strings."""
    if d < 1:
        raise ValueError(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d)
             if v < v ^ (1 << b)]
    labels = [format(v, f"0{d}b") for v in range(n)]
    return Graph(n, edges, labels=labels, name=f"Q_{d}")


def make_cycle_power(n, d):
    """d-th power of the cycle: i ~ j iff cycle distance <= d, 1 <= d < ceil(n/2)."""
    if n < 3:
        raise ValueError(f"cycle power needs n >= 3, got {n}")
    if not 1 <= d < (n + 1) // 2:
        raise ValueError(f"cycle power needs 1 <= d < ceil(n/2), got d={d}, n={n}")
    edges = []
    for i in range(n):
        for s in range(1, d + 1):
            j = (i + s) % n
            edges.append((min(i, j), max(i, j)))
    return Graph(n, set(edges), name=f"C_{n}^{d}")


def make_petersen():
    """The Petersen graph (outer 5-cycle 0..4, inner pentagram 5..9)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges, name="Petersen")


def make_empty(n):
    """Edgeless graph on n vertices."""
    return Graph(n, [], name=f"E_{n}")


# -- structural invariants ---------------------------------------------------

def bfs_distances(g, source):
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def is_connected(g):
    if g.n == 0:
        return True
    return all(d >= 0 for d in bfs_distances(g, 0))


def eccentricities(g):
    """All-vertex eccentricities; raises on disconnected input."""
    ecc = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if min(dist) < 0:
            raise DisconnectedGraphError(
                f"{g.name or 'graph'} is disconnected; distances are infinite")
        ecc.append(max(dist))
    return ecc


def diameter(g):
    return max(eccentricities(g))


def radius(g):
    return min(eccentricities(g))


def bipartition(g):
    """BFS 2-coloring; returns (C1, C2) with |C1| <= |C2|, or None.

    Deterministic: component roots taken in vertex order, root in part 1.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                if side[v] < 0:
                    side[v] = side[u] ^ 1
                    q.append(v)
                elif side[v] == side[u]:
                    return None
    c1 = [v for v in range(g.n) if side[v] == 0]
    c2 = [v for v in range(g.n) if side[v] == 1]
    if len(c1) > len(c2):
        c1, c2 = c2, c1
    return c1, c2


def has_odd_cycle(g):
    """Independent odd-cycle detector (DFS parity), for cross-checks."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        stack = [(root, 0)]
        while stack:
            u, c = stack.pop()
            if color[u] >= 0:
                if color[u] != c:
                    return True
                continue
            color[u] = c
            for v in g.adj[u]:
                stack.append((v, c ^ 1))
    return False


def equitable_check(g, partition):
    """Quotient matrix of the partition if it is equitable, else None."""
    partition.validate(g)
    classes = partition.classes
    sigma = len(classes)
    cls_of = [0] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            cls_of[v] = i
    entries = [[0] * sigma for _ in range(sigma)]
    for i, cls in enumerate(classes):
        ref = None
        for v in cls:
            counts = [0] * sigma
            for w in g.adj[v]:
                counts[cls_of[w]] += 1
            if ref is None:
                ref = counts
            elif counts != ref:
                return None
        entries[i] = ref
    return QuotientMatrix(entries, [len(c) for c in classes], flavor="adjacency")


# -- isomorphism -------------------------------------------------------------

def _refine_colors(g, colors):
    """Iterated neighborhood color refinement (1-dim WL), canonical ints."""
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in g.adj[v])))
               for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def is_isomorphic(g, h, force=False, guard=ISO_GUARD):
    """Exact isomorphism test: color refinement plus backtracking."""
    if max(g.n, h.n) > guard and not force:
        raise GraphTooLargeError(
            f"isomorphism guard {guard} exceeded (n={max(g.n, h.n)}); "
            "pass force=True to override")
    if g.n != h.n or g.m != h.m:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    cg = _refine_colors(g, [g.degree(v) for v in range(g.n)])
    ch = _refine_colors(h, [h.degree(v) for v in range(h.n)])
    if sorted(cg) != sorted(ch):
        return False

    # order G's vertices by ascending color-class rarity, then index
    hist = {}
    for c in cg:
        hist[c] = hist.get(c, 0) + 1
    order = sorted(range(g.n), key=lambda v: (hist[cg[v]], cg[v], v))
    cands = [[u for u in range(h.n) if ch[u] == cg[v]] for v in order]

    mapping = [-1] * g.n
    used = [False] * h.n

    def backtrack(pos):
        if pos == g.n:
            return True
        v = order[pos]
        for u in cands[pos]:
            if used[u]:
                continue
            ok = True
            for w in g.adj[v]:
                mw = mapping[w]
                if mw >= 0 and not h.has_edge(u, mw):
                    ok = False
                    break
            if ok:
                # non-edges must map to non-edges: check against all mapped
                for w in order[:pos]:
                    if not g.has_edge(v, w) and h.has_edge(u, mapping[w]):
                        ok = False
                        break
            if ok:
                mapping[v] = u
                used[u] = True
                if backtrack(pos + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    return backtrack(0)
