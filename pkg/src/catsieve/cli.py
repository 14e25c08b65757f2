"""
Command-line front end.

    catsieve enumerate --family config --n 3
    catsieve verify --family matching --n 4 --format json
    catsieve qcatalan --n 5 --d 2
    catsieve identity --n 7
    catsieve report --family triangulation --n-max 8

Exit status: 0 success, 1 mathematical mismatch, 2 usage or size-limit error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .actions import FAMILY_NAMES, cyclic_action
from .closedform import catalan_sum_identity
from .csp import burnside_check, family_descriptor, verify_csp
from .qpoly import eval_at_primitive_root, q_binomial, q_catalan

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# largest n accepted per family, in the family's own size index
CLI_CAPS = {"config": 14, "matching": 8, "triangulation": 10}


class UsageError(Exception):
    pass


def _enumeration_cap(family: str, n_cap: int) -> int:
    # translate an n-cap into the unit the enumerator checks
    return {"config": n_cap - 1, "matching": n_cap, "triangulation": n_cap + 2}[family]


def _check_n(family: str, n: int, cap: int | None) -> int | None:
    limit = CLI_CAPS[family] if cap is None else cap
    if n > limit:
        raise UsageError(f"n={n} exceeds the {family} cap {limit} (use --cap to raise it)")
    return None if cap is None else _enumeration_cap(family, cap)


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".catsieve-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, output)
    except BaseException:
        os.unlink(tmp)
        raise


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def run_enumerate(args) -> int:
    enum_cap = _check_n(args.family, args.n, args.cap)
    objs = cyclic_action(args.family, args.n, cap=enum_cap).objects()
    if args.format == "json":
        text = _dumps({"family": args.family, "n": args.n, "count": len(objs), "objects": [o.to_text() for o in objs]})
    else:
        text = "\n".join([o.to_text() for o in objs] + [f"count={len(objs)}"])
    _emit(text, args.output)
    return EXIT_OK


def run_verify(args) -> int:
    enum_cap = _check_n(args.family, args.n, args.cap)
    report = verify_csp(family_descriptor(args.family, args.n, cap=enum_cap))
    _emit(report.dumps() if args.format == "json" else report.to_text(), args.output)
    print(f"verified in {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.csp_holds and burnside_check(report) else EXIT_MISMATCH


def run_qcatalan(args) -> int:
    if args.n < 0:
        raise UsageError("n must be >= 0")
    poly = q_catalan(args.n)
    if args.d is None:
        if args.format == "json":
            text = _dumps({"n": args.n, "coeffs": [str(c) for c in poly.coeffs]})
        else:
            text = " ".join(map(str, poly.coeffs))
    else:
        if args.d < 1:
            raise UsageError("d must be >= 1")
        value = eval_at_primitive_root(poly, args.d)
        if args.format == "json":
            text = _dumps({
                "n": args.n,
                "d": args.d,
                "value": None if value.as_int() is None else str(value.value),
                "residue": [str(c) for c in value.residue.coeffs],
            })
        elif value.is_integer():
            text = str(value.value)
        else:
            text = f"residue={value.residue.to_str()}"
    _emit(text, args.output)
    return EXIT_OK


def run_identity(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be >= 1")
    left, right = catalan_sum_identity(n)
    qdiff = q_binomial(2 * n, n) - q_binomial(2 * n, n + 1) == q_catalan(n).shift(n)
    ok = left == right and qdiff
    if args.format == "json":
        text = _dumps({"n": n, "sum": str(left), "catalan": str(right), "qdiff": qdiff, "holds": ok})
    else:
        text = f"sum={left} catalan={right} qdiff={'ok' if qdiff else 'FAIL'}"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def run_report(args) -> int:
    lo = args.n_min if args.n_min is not None else (0 if args.family == "matching" else 1)
    if args.n_max < lo:
        raise UsageError("n-max must be >= n-min")
    enum_cap = _check_n(args.family, args.n_max, args.cap)
    reports = [verify_csp(family_descriptor(args.family, n, cap=enum_cap)) for n in range(lo, args.n_max + 1)]
    ok = all(r.csp_holds and burnside_check(r) for r in reports)
    if args.format == "json":
        text = _dumps([r.to_json() for r in reports])
    else:
        header = ("n", "group_order", "size", "orbits", "burnside", "csp_holds")
        body = [
            (str(r.n), str(r.group_order), str(r.rows[0].fixed), str(r.orbits),
             "ok" if burnside_check(r) else "FAIL", "true" if r.csp_holds else "false")
            for r in reports
        ]
        widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
        text = "\n".join("  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in [header, *body])
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catsieve", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=True):
        if family:
            p.add_argument("--family", choices=FAMILY_NAMES, default="config")
            p.add_argument("--cap", type=int, default=None, help="override the largest accepted n")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", default=None, help="write results to this file instead of stdout")

    p = sub.add_parser("enumerate", help="list every object of a family")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=run_enumerate)

    p = sub.add_parser("verify", help="check the cyclic sieving identity for every rotation")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("qcatalan", help="coefficients of C_n(q), or its value at a primitive d-th root")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    common(p, family=False)
    p.set_defaults(func=run_qcatalan)

    p = sub.add_parser("identity", help="check the Catalan summation and q-binomial difference identities")
    p.add_argument("--n", type=int, required=True)
    common(p, family=False)
    p.set_defaults(func=run_identity)

    p = sub.add_parser("report", help="summary table of verify over a range of n")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=None)
    common(p)
    p.set_defaults(func=run_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
