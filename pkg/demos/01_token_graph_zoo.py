"""A tour of the basic constructions.

Builds token graphs, supertoken graphs, and graph powers for a few small
base graphs, checks the closed-form vertex/edge counts, and shows the
JSON and DOT serializations used by the command-line tool.
"""

from math import comb

from tokengraphs import (
    diameter,
    is_isomorphic,
    make_complete,
    make_cycle,
    make_hypercube,
    make_path,
    make_petersen,
    strong_power,
    supertoken_graph,
    token_graph,
)


def main():
    print("=== counts ===")
    print("For a base graph with n vertices and m edges, the k-supertoken")
    print("graph has C(n+k-1, k) vertices and m*C(n+k-2, k-1) edges.\n")
    bases = [make_cycle(5), make_cycle(7), make_path(4), make_complete(4),
             make_hypercube(3), make_petersen()]
    for g in bases:
        for k in (2, 3):
            f = supertoken_graph(g, k)
            assert f.n == comb(g.n + k - 1, k)
            assert f.m == g.m * comb(g.n + k - 2, k - 1)
            print(f"  {f.name:<16} n={f.n:>4}  m={f.m:>5}  "
                  f"diameter={diameter(f)}")
    print()

    print("=== token vs supertoken ===")
    g = make_cycle(5)
    t = token_graph(g, 2)
    f = supertoken_graph(g, 2)
    print(f"  {t.name}: tokens on distinct vertices, n={t.n}")
    print(f"  {f.name}: tokens may stack, n={f.n}")
    print(f"  the extra {f.n - t.n} configurations are the doubled tokens\n")

    print("=== products ===")
    s = strong_power(make_cycle(4), 2)
    print(f"  strong square of C_4: n={s.n}, m={s.m}, "
          f"regular of degree {s.degree(0)}")
    print(f"  1-token graph of C_6 is C_6 itself: "
          f"{is_isomorphic(token_graph(make_cycle(6), 1), make_cycle(6))}\n")

    print("=== serialization ===")
    small = supertoken_graph(make_path(3), 2)
    print("  JSON (round-trips through Graph.from_json):")
    print("   ", small.to_json()[:72], "...")
    print("  DOT (for graphviz):")
    for line in small.to_dot().splitlines()[:4]:
        print("   ", line)
    print("    ...")


if __name__ == "__main__":
    main()
