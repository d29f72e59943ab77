"""Command-line front end.

Subcommands: build, invariants, bound, spectrum, verify, rate, color-lift.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bounds, constructions, graphs, invariants, spectra, verify
from .errors import GraphTooLargeError, TokenGraphError

FAMILIES = {
    "cycle": lambda a: graphs.make_cycle(a[0]),
    "path": lambda a: graphs.make_path(a[0]),
    "complete": lambda a: graphs.make_complete(a[0]),
    "hypercube": lambda a: graphs.make_hypercube(a[0]),
    "cycle-power": lambda a: graphs.make_cycle_power(a[0], a[1]),
    "petersen": lambda a: graphs.make_petersen(),
    "empty": lambda a: graphs.make_empty(a[0]),
}


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path):
    with open(path) as fh:
        return graphs.Graph.from_json(fh.read())


def cmd_build(args):
    base = FAMILIES[args.family](args.params)
    force = args.force
    if args.construction == "none":
        g = base
    elif args.construction == "supertoken":
        g = constructions.supertoken_graph(base, args.k, force=force)
    elif args.construction == "token":
        g = constructions.token_graph(base, args.k, force=force)
    elif args.construction == "strong-power":
        g = constructions.strong_power(base, args.k, force=force)
    elif args.construction == "cartesian-power":
        g = constructions.cartesian_power(base, args.k, force=force)
    elif args.construction == "augmented":
        if args.family != "cycle":
            raise ValueError("augmented construction applies to cycles only")
        g = constructions.augmented_two_token_cycle(
            args.params[0], args.p, force=force)
    else:
        raise ValueError(f"unknown construction {args.construction}")
    text = g.to_dot() if args.format == "dot" else g.to_json()
    _emit(text, args.out)
    return 0


def cmd_invariants(args):
    g = _load_graph(args.graph)
    solvers = {
        "alpha": invariants.independence_number,
        "omega": invariants.clique_number,
        "chi": invariants.chromatic_number,
        "metric-dimension": invariants.metric_dimension,
    }
    cert = solvers[args.which](g, force=args.force)
    obj = {"graph": g.name, "invariant": args.which, "value": cert.value,
           "witness": cert.witness}
    _emit(json.dumps(obj) + "\n", args.out)
    return 0


def cmd_bound(args):
    if args.kind == "partition":
        g = _load_graph(args.graph)
        coloring = invariants.chromatic_number(g, force=args.force).witness
        value, part = bounds.best_partition_bound(
            g, coloring, args.k, force=args.force)
        obj = {"graph": g.name, "k": args.k, "bound": value,
               "groups": part.groups}
    elif args.kind == "bipartite":
        c1, c2, k = args.params
        obj = {"c1": c1, "c2": c2, "k": k,
               "bound": bounds.bipartite_bound(c1, c2, k)}
    elif args.kind == "alpha-2cycle":
        n = args.params[0]
        obj = {"n": n, "alpha": bounds.alpha_supertoken2_cycle(n)}
    elif args.kind == "alpha-augmented":
        n, p = args.params
        obj = {"n": n, "p": p, "alpha": bounds.alpha_augmented(n, p)}
    elif args.kind == "rate":
        alpha, k = args.params
        obj = {"alpha": alpha, "k": k,
               "rate": bounds.information_rate(alpha, k)}
    elif args.kind == "bipartite-row":
        c = args.params[0]
        row = bounds.bipartite_row(c, args.kmax)
        if args.format == "csv":
            text = "\n".join(f"{k},{v}" for k, v in enumerate(row)) + "\n"
            _emit(text, args.out)
            return 0
        obj = {"c": c, "row": row}
    else:
        raise ValueError(f"unknown bound kind {args.kind}")
    _emit(json.dumps(obj) + "\n", args.out)
    return 0


def cmd_spectrum(args):
    g = _load_graph(args.graph)
    if args.quotient:
        with open(args.quotient) as fh:
            classes = json.load(fh)["classes"]
        part = graphs.VertexPartition(classes)
        q = graphs.equitable_check(g, part)
        if q is None:
            raise ValueError("partition is not equitable")
        if args.laplacian:
            q = q.to_laplacian()
        spec = spectra.quotient_spectrum(q, zero_tol=args.zero_tol)
    elif args.laplacian:
        spec = spectra.laplacian_spectrum(g, zero_tol=args.zero_tol,
                                          force=args.force)
    else:
        spec = spectra.adjacency_spectrum(g, zero_tol=args.zero_tol,
                                          force=args.force)
    if args.format == "csv":
        vals, counts = np.unique(np.round(spec.eigenvalues, 12),
                                 return_counts=True)
        text = "\n".join(f"{v:.12g},{c}" for v, c in zip(vals, counts)) + "\n"
    else:
        neg, zero, pos = spec.inertia
        text = json.dumps({
            "graph": g.name,
            "eigenvalues": [float(x) for x in spec.eigenvalues],
            "inertia": {"negative": neg, "zero": zero, "positive": pos},
        }) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args):
    ids = args.cases or None
    cases = verify.run_cases(ids)
    text = "\n".join(verify.report_lines(cases, verbose=args.verbose)) + "\n"
    _emit(text, args.out)
    return 1 if any(c.status == "fail" for c in cases) else 0


def cmd_rate(args):
    obj = {"alpha": args.alpha, "k": args.k,
           "rate": bounds.information_rate(args.alpha, args.k)}
    _emit(json.dumps(obj) + "\n", args.out)
    return 0


def cmd_color_lift(args):
    g = _load_graph(args.graph)
    lift, used = verify.modular_color_lift(g, args.k, force=args.force)
    obj = {"graph": g.name, "k": args.k, "colors_used": used, "lift": lift}
    _emit(json.dumps(obj) + "\n", args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tokengraphs",
        description="Token and supertoken graph constructions, exact "
                    "invariants, bounds, spectra, and table verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to this file")
        p.add_argument("--force", action="store_true",
                       help="override size guards")

    p = sub.add_parser("build", help="construct a graph and emit JSON/DOT")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--construction", default="none",
                   choices=["none", "supertoken", "token", "strong-power",
                            "cartesian-power", "augmented"])
    p.add_argument("-k", type=int, default=2)
    p.add_argument("-p", type=int, default=0)
    p.add_argument("--format", default="json", choices=["json", "dot"])
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invariants", help="exact invariant with witness")
    p.add_argument("graph")
    p.add_argument("--which", default="alpha",
                   choices=["alpha", "omega", "chi", "metric-dimension"])
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("bound", help="closed-form bounds and exact formulas")
    p.add_argument("kind", choices=["partition", "bipartite", "alpha-2cycle",
                                    "alpha-augmented", "rate", "bipartite-row"])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--graph", help="graph JSON (partition bound)")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--kmax", type=int, default=9)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("spectrum", help="adjacency/Laplacian/quotient spectra")
    p.add_argument("graph")
    p.add_argument("--laplacian", action="store_true")
    p.add_argument("--quotient", help="partition JSON file")
    p.add_argument("--zero-tol", type=float, default=0.0)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="regenerate table/figure claims")
    p.add_argument("cases", nargs="*", help="case ids (default: all)")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--tolerance", type=float, default=None,
                   help="reserved per-case tolerance override")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rate", help="information rate log2(alpha)/k")
    p.add_argument("alpha", type=int)
    p.add_argument("k", type=int)
    common(p)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("color-lift", help="lift a chromatic coloring to the "
                                          "k-supertoken by modular sums")
    p.add_argument("graph")
    p.add_argument("-k", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_color_lift)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, TokenGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
