"""The p-augmented 2-token graphs of cycles.

The augmented family interpolates between the 2-token graph (p = 0) and
the 2-supertoken graph (p = 1) of a cycle and keeps growing from there.
This demo checks those identities, the exact independence formula, the
equitable rotation quotients, and the spectral radii that approach 4.
"""

import math

from tokengraphs import (
    adjacency_spectrum,
    alpha_augmented,
    augmented_cyclic_partition,
    augmented_quotient,
    augmented_two_token_cycle,
    equitable_check,
    independence_number,
    is_isomorphic,
    make_cycle,
    phi_max_root,
    quotient_spectrum,
    spectrum_contains,
    supertoken_graph,
    token_graph,
)


def main():
    print("=== the first two layers are old friends ===")
    for n in range(4, 8):
        iso0 = is_isomorphic(augmented_two_token_cycle(n, 0),
                             token_graph(make_cycle(n), 2))
        iso1 = is_isomorphic(augmented_two_token_cycle(n, 1),
                             supertoken_graph(make_cycle(n), 2))
        print(f"  n={n}: p=0 ~ 2-token {iso0},  p=1 ~ 2-supertoken {iso1}")
    print()

    print("=== exact independence numbers ===")
    print("  closed formula (by n mod 4 and the parity of p) vs solver:")
    for n in (4, 5, 6, 7):
        row = []
        for p in range(4):
            g = augmented_two_token_cycle(n, p)
            exact = independence_number(g).value
            assert exact == alpha_augmented(n, p)
            row.append(exact)
        print(f"    n={n}: p=0..3 -> {row}")
    print()

    print("=== rotation quotients ===")
    for n, p in [(7, 2), (6, 1)]:
        g = augmented_two_token_cycle(n, p)
        part = augmented_cyclic_partition(n, p)
        q = equitable_check(g, part)
        print(f"  n={n}, p={p}: quotient dimension {len(q.class_sizes)}, "
              f"class sizes {q.class_sizes}")
        spec = quotient_spectrum(q)
        print(f"    quotient eigenvalues live inside the full spectrum: "
              f"{spectrum_contains(adjacency_spectrum(g), spec.eigenvalues)}")
    print()

    print("=== spectral radii march toward 4 ===")
    print("  odd n: radius = 4 cos(pi/(n+2p))")
    for n, p in [(5, 0), (5, 2), (7, 2), (9, 2)]:
        rad = adjacency_spectrum(augmented_two_token_cycle(n, p)).radius
        formula = 4 * math.cos(math.pi / (n + 2 * p))
        print(f"    n={n}, p={p}: {rad:.6f}  (formula {formula:.6f})")
    print("  even n: radius = largest root of the recurrence polynomials,")
    print("  indexed by r = n/2 + p")
    for r in range(2, 8):
        print(f"    r={r}: {phi_max_root(r):.4f}")


if __name__ == "__main__":
    main()
