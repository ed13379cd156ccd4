"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or scope error,
3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import verify_imaginary_zeros, verify_log_concavity
from .combinat import Partition, class_size, default_max_n, parse_partition
from .errors import BoundExceeded, HyperfacesError
from .products import brute_force_histogram, xi_character, xi_fixed_first
from .records import SCHEMA, ResultRecord, rational_str, render_polynomial
from .twoface import (
    is_admissible,
    polynomial_from_histogram,
    theta_decompose,
    two_face_polynomial,
)
from .verify import SUITES, admissible_betas, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
FORMATS = ("plain", "json", "latex", "csv")


def _beta(args) -> Partition:
    return parse_partition(args.beta, args.n)


def _max_n(args) -> int:
    return args.max_n if getattr(args, "max_n", None) is not None else default_max_n()


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_poly(args) -> int:
    beta = _beta(args)
    if args.oracle and not is_admissible(args.n, beta):
        hist = brute_force_histogram(Partition(2, args.n - 2), beta, max_n=_max_n(args))
        tf = polynomial_from_histogram(hist, beta)
    else:
        tf = two_face_polynomial(args.n, beta)
    _emit(
        render_polynomial(
            tf.poly,
            args.format,
            n=tf.n,
            beta=str(beta),
            method=tf.provenance.value,
            genus={str(m): g for m, g in tf.genus_labels().items()},
            flags=list(tf.flags),
        )
    )
    return EXIT_OK


def cmd_oracle(args) -> int:
    beta = _beta(args)
    alpha_type = parse_partition(args.alpha, args.n) if args.alpha else Partition(2, args.n - 2)
    hist = brute_force_histogram(alpha_type, beta, max_n=_max_n(args), workers=args.workers)
    agreement = "n/a"
    poly = None
    if alpha_type == Partition(2, args.n - 2):
        poly = polynomial_from_histogram(hist, beta).poly
        if is_admissible(args.n, beta):
            agreement = "pass" if two_face_polynomial(args.n, beta).poly == poly else "fail"
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "n": args.n,
            "alpha": str(alpha_type),
            "beta": str(beta),
            "counts": {str(m): c for m, c in hist.counts.items()},
            "total": hist.total,
            "agreement": agreement,
        }
        if poly is not None:
            payload["coefficients"] = [[d, rational_str(c)] for d, c in poly.terms().items()]
        _emit(json.dumps(payload))
    elif args.format == "csv":
        _emit("cycles,count")
        for m, c in hist.counts.items():
            _emit(f"{m},{c}")
    else:
        _emit("counts: " + ", ".join(f"{m}:{c}" for m, c in hist.counts.items()))
        _emit(f"total: {hist.total} (class size {class_size(beta)})")
        if poly is not None:
            _emit("polynomial: " + (poly.to_latex() if args.format == "latex" else poly.to_plain()))
        _emit(f"agreement: {agreement}")
    return EXIT_FAIL if agreement == "fail" else EXIT_OK


def cmd_verify(args) -> int:
    summary = run_suites(args.n_max, args.suite, corrupt=args.inject_corruption)
    _emit(json.dumps(summary, indent=2))
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def table_records(n_max: int, min_part: int = 1) -> list[ResultRecord]:
    records = []
    for n in range(5, n_max + 1):
        for beta in admissible_betas(n, min_part):
            tf = two_face_polynomial(n, beta)
            checks = {k: ("pass" if v else "fail") for k, v in tf.check_invariants().items()}
            z = verify_imaginary_zeros(tf).pure_imaginary
            lc = verify_log_concavity(tf).log_concave
            if beta == Partition(2, n - 2):
                checks["imaginary_zeros"] = "reported"
                checks["log_concave"] = "reported"
            else:
                checks["imaginary_zeros"] = "pass" if z else "fail"
                checks["log_concave"] = "pass" if lc else "fail"
            records.append(
                ResultRecord.from_polynomial(
                    n, beta, "closed-form", tf.poly, tf.genus_labels(), checks, tf.flags
                )
            )
    records.sort(key=lambda r: (r.n, tuple(-p for p in r.partition().parts)))
    return records


def cmd_table(args) -> int:
    records = table_records(args.n_max, args.min_part)
    text = "".join(r.to_json() + "\n" for r in records)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_bytes(text.encode("utf-8"))
    failed = any(v == "fail" for r in records for v in r.checks.values())
    return EXIT_FAIL if failed else EXIT_OK


def cmd_decompose(args) -> int:
    beta = _beta(args)
    dec = theta_decompose(beta)
    identity_ok = dec.check_identity()
    recon = "n/a"
    if beta.min_part() >= 3 and is_admissible(args.n, beta):
        recon = "pass" if dec.reconstruct() == two_face_polynomial(args.n, beta).poly else "fail"
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "n": args.n,
            "beta": str(beta),
            "coefficients": {str(i): rational_str(a) for i, a in sorted(dec.coeffs.items(), reverse=True)},
            "identity": "pass" if identity_ok else "fail",
            "reconstruction": recon,
        }
        _emit(json.dumps(payload))
    else:
        _emit("a = (" + ", ".join(str(a) for a in dec.vector()) + ")  [i = n..1]")
        _emit(f"identity: {'pass' if identity_ok else 'fail'}")
        _emit(f"reconstruction: {recon}")
    return EXIT_OK if identity_ok and recon != "fail" else EXIT_FAIL


def cmd_zeros(args) -> int:
    beta = _beta(args)
    tf = two_face_polynomial(args.n, beta)
    z = verify_imaginary_zeros(tf)
    c = verify_log_concavity(tf)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "n": args.n,
            "beta": str(beta),
            "pure_imaginary": z.pure_imaginary,
            "zero_root_multiplicity": z.zero_root_multiplicity,
            "even_part": [[d, rational_str(v)] for d, v in z.even_part.terms().items()],
            "real_roots_found": z.real_roots_found,
            "log_concave": c.log_concave,
            "unimodal": c.unimodal,
        }
        _emit(json.dumps(payload))
    else:
        _emit(f"pure_imaginary: {str(z.pure_imaginary).lower()}")
        _emit(f"zero_root_multiplicity: {z.zero_root_multiplicity}")
        _emit(f"even_part: {z.even_part.to_plain()}")
        _emit(f"log_concave: {str(c.log_concave).lower()}")
        _emit(f"unimodal: {str(c.unimodal).lower()}")
    return EXIT_OK


def cmd_xi(args) -> int:
    classes = [parse_partition(t, args.n) for t in args.classes.split(";")]
    fixed = xi_fixed_first(args.m, classes)
    tuples = xi_character(args.m, classes)
    if args.format == "json":
        _emit(json.dumps({"schema": SCHEMA, "n": args.n, "m": args.m,
                          "classes": [str(c) for c in classes], "fixed_first": fixed, "tuples": tuples}))
    else:
        _emit(str(tuples if args.tuples else fixed))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfaces",
        description="Genus distributions of two-face hypermaps of face-type [2, n-2].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, beta=True, fmt=True):
        p.add_argument("--n", type=int, required=True)
        if beta:
            p.add_argument("--beta", required=True, help="edge-type, e.g. 3,3 or [3^2]")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("poly", help="closed-form polynomial P_[2,n-2],beta(x)")
    common(p)
    p.add_argument("--oracle", action="store_true", help="fall back to brute force when no closed form applies")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("oracle", help="brute-force cycle histogram")
    common(p)
    p.add_argument("--alpha", default=None, help="cycle-type of the fixed permutation (default 2,n-2)")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run invariant suites; exit 1 on any failure")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    p.add_argument("--inject-corruption", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="JSON-lines table of every admissible (n, beta)")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--min-part", type=int, default=1)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("decompose", help="coefficients over the hook basis")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("zeros", help="imaginary-zero and log-concavity check")
    common(p)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("xi", help="character-sum count of products with m cycles")
    common(p, beta=False)
    p.add_argument("--classes", required=True, help='semicolon-separated, e.g. "2,4;3,3"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tuples", action="store_true", help="count full tuples instead of fixing the first class")
    p.set_defaults(func=cmd_xi)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except HyperfacesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
