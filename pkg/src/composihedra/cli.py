"""Command line front end.

    composihedra count --n N
    composihedra enumerate --n N [--classes]
    composihedra realize --family ck|k|j --n N [--q P/Q] [--weights a,b,...] [--format text|polymake|json]
    composihedra verify --n N [--weights a,b,...] [--no-lattice] [--no-products]
    composihedra export --format polymake|json --out PATH --n N [--object vrep|hrep|poset|lattice]

Every command accepts ``--json`` to print a machine-readable report.  The
exit status is 0 iff every check in the report passed.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import golden
from .complex import face_poset_composihedron
from .counting import (
    facet_breakdown, facet_identity, generating_function_rhs, vertex_count,
    vertex_count_closed_form, vertex_sequence,
)
from .formats import export_json, export_polymake
from .hull import face_lattice_geometric
from .realization import (
    associahedron_vrep, check_weights, composihedron_hrep, composihedron_vrep,
    multiplihedron_vrep,
)
from .report import RunReport, verify
from .trees import canonicalize_domain, enumerate_binary_painted, weighted_form


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {n}")
    return n


def _weights(text):
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers: {text!r}")
    if any(x < 1 for x in w):
        raise argparse.ArgumentTypeError(f"weights must be positive: {text!r}")
    return w


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    p = argparse.ArgumentParser(prog="composihedra", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="vertex/facet counts and identities")
    c.add_argument("--n", type=_positive_int, required=True)

    e = sub.add_parser("enumerate", parents=[common], help="list binary painted trees")
    e.add_argument("--n", type=_positive_int, required=True)
    e.add_argument("--classes", action="store_true", help="list domain classes instead")

    r = sub.add_parser("realize", parents=[common], help="vertex coordinates")
    r.add_argument("--family", choices=["ck", "k", "j"], default="ck")
    r.add_argument("--n", type=_positive_int, required=True)
    r.add_argument("--q", type=_rational, default=None)
    r.add_argument("--weights", type=_weights, default=None)
    r.add_argument("--format", choices=["text", "polymake", "json"], default="text")
    r.add_argument("--out", default=None, help="write the points here instead of stdout")

    v = sub.add_parser("verify", parents=[common], help="run the verification ladder")
    v.add_argument("--n", type=_positive_int, required=True)
    v.add_argument("--weights", type=_weights, default=None)
    v.add_argument("--no-lattice", action="store_true", help="skip the lattice isomorphism")
    v.add_argument("--no-products", action="store_true", help="skip facet product checks")

    x = sub.add_parser("export", parents=[common], help="write polymake or JSON files")
    x.add_argument("--format", choices=["polymake", "json"], required=True)
    x.add_argument("--out", required=True)
    x.add_argument("--n", type=_positive_int, required=True)
    x.add_argument("--weights", type=_weights, default=None)
    x.add_argument("--object", choices=["vrep", "hrep", "poset", "lattice"], default="vrep")
    return p


def _count(args) -> RunReport:
    n = args.n
    rep = RunReport("count", {"n": n})
    seq = vertex_sequence(n)
    rep.counts[f"a_{n}"] = seq[n]
    rep.counts["sequence"] = seq[1:]
    rep.add("recursion = closed form", all(vertex_count_closed_form(k) == seq[k] for k in range(n + 1)),
            f"k = 0..{n}")
    ref = golden.VERTEX_SEQUENCE
    upto = min(n, len(ref) - 1)
    rep.add("reference sequence", list(seq[:upto + 1]) == list(ref[:upto + 1]),
            f"a_0..a_{upto} against the stored values")
    deg = max(n, 1)
    rep.add("generating function", generating_function_rhs(deg) == vertex_sequence(deg),
            f"A = x/(1-x) + A^2 through degree {deg}")
    lhs, rhs = facet_identity(n)
    rep.add("facet identity", lhs == rhs, f"{lhs} = 2n = {rhs}")
    if n >= 2:
        fb = facet_breakdown(n)
        rep.counts["facets"] = {"upper": fb.upper_count, "lower": fb.lower_count, "total": fb.total}
    return rep


def _enumerate(args, out):
    n = args.n
    rep = RunReport("enumerate", {"n": n, "classes": args.classes})
    trees = enumerate_binary_painted(n)
    classes = sorted({canonicalize_domain(t) for t in trees})
    rep.counts["binary painted trees"] = len(trees)
    rep.counts["domain classes"] = len(classes)
    rep.add("classes = a_n", len(classes) == vertex_count(n), f"{len(classes)} vs {vertex_count(n)}")
    if not args.json:
        if args.classes:
            reps = {}
            for t in trees:
                reps.setdefault(canonicalize_domain(t), t)
            for c in classes:
                wf = weighted_form(reps[c])
                print(f"{c}  shape={wf.shape} weights={','.join(map(str, wf.weights))}", file=out)
        else:
            for t in trees:
                print(t, file=out)
    return rep


def _realize_vrep(family, n, q, weights):
    if family == "ck":
        if q not in (None, 0):
            raise UsageError("family ck is realized at q = 0; use --family j for 0 < q < 1")
        return composihedron_vrep(n, weights)
    if family == "j":
        if q is None:
            raise UsageError("family j needs --q with 0 < q < 1")
        return multiplihedron_vrep(n, q, weights)
    if weights is not None or q is not None:
        raise UsageError("family k takes neither --q nor --weights")
    if n < 2:
        raise UsageError("family k needs n >= 2")
    return associahedron_vrep(n)


def _emit(text, path, out):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def _realize(args, out):
    n = args.n
    if args.weights is not None:
        check_weights(args.weights, n)
    v = _realize_vrep(args.family, n, args.q, args.weights)
    params = {"family": args.family, "n": n}
    if args.q is not None:
        params["q"] = str(args.q)
    if args.weights is not None:
        params["weights"] = ",".join(map(str, args.weights))
    rep = RunReport("realize", params)
    rep.counts["points"] = len(v)
    if args.family == "ck":
        rep.add("points = a_n", len(v) == vertex_count(n), f"{len(v)} vs {vertex_count(n)}")
    if args.format == "polymake":
        _emit(export_polymake(v), args.out, out)
    elif args.format == "json":
        _emit(export_json(v) + "\n", args.out, out)
    elif not args.json:
        lines = ["(" + ", ".join(map(str, p)) + ")  " + (lab or "") for p, lab in zip(v.points, v.labels)]
        _emit("\n".join(lines) + "\n", args.out, out)
    return rep


def _export(args):
    n = args.n
    w = check_weights(args.weights, n)
    rep = RunReport("export", {"n": n, "object": args.object, "format": args.format, "out": args.out})
    if args.format == "polymake":
        if args.object != "vrep":
            raise UsageError("polymake export writes point sets only (--object vrep)")
        text = export_polymake(composihedron_vrep(n, w))
    else:
        if args.object == "vrep":
            obj = composihedron_vrep(n, w)
        elif args.object == "hrep":
            obj = composihedron_hrep(n, w)
        elif args.object == "poset":
            obj = face_poset_composihedron(n)
        else:
            obj = face_lattice_geometric(composihedron_hrep(n, w), composihedron_vrep(n, w))
        text = export_json(obj) + "\n"
    with open(args.out, "w") as fh:
        fh.write(text)
    rep.counts["bytes"] = len(text.encode())
    rep.add("written", True, args.out)
    return rep


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.command == "count":
            rep = _count(args)
        elif args.command == "enumerate":
            rep = _enumerate(args, out)
        elif args.command == "realize":
            rep = _realize(args, out)
        elif args.command == "verify":
            rep = verify(args.n, args.weights, lattice=not args.no_lattice,
                         products=not args.no_products)
        else:
            rep = _export(args)
    except (UsageError, ValueError) as exc:
        print(f"composihedra {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if not rep.seconds:
        rep.seconds = time.perf_counter() - t0
    if args.json:
        print(export_json(rep, indent=None), file=out)
    elif args.command in ("count", "verify", "export") or (
            args.command == "realize" and args.format == "text" and args.out):
        print(rep.text(), file=out)
    elif args.command == "enumerate":
        print(rep.text(), file=sys.stderr)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
