"""Command-line front end.

Exit codes: 0 success, 1 expression parse error, 2 domain or usage error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import calculus, metric
from .errors import FeecError, ParseError
from .exterior import restrict_to_T
from .notation import form_to_json, format_form, parse_form
from .pairing import pairing_matrix
from .spaces import KINDS, basis_H, basis_P, basis_Pminus, form_space, ring_subspace
from .verification import max_cells_from_env, run_suite

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3

OPERATORS = {
    "d": calculus.d,
    "boldd": calculus.bold_d,
    "sboldd": calculus.s_bold_d,
    "ix": calculus.i_X,
    "jx": calculus.j_X,
    "dswedge": calculus.ds_wedge,
    "koszul": calculus.koszul,
    "star": metric.hodge_star_g,
    "starinv": metric.hodge_star_g_inverse,
    "hr": None,
    "restrict": restrict_to_T,
}


def _emit_form(form, args) -> None:
    if args.json:
        print(json.dumps(form_to_json(form)))
    else:
        print(format_form(form, basis=args.basis))


def cmd_dim(args) -> int:
    space = form_space(args.space, args.n, args.r, args.k)
    if args.json:
        print(json.dumps({"space": args.space, "n": args.n, "r": args.r, "k": args.k, "dim": space.dim}))
    else:
        print(space.dim)
    return EXIT_OK


def cmd_basis(args) -> int:
    space = form_space(args.space, args.n, args.r, args.k)
    if args.json:
        payload = {
            "space": args.space,
            "n": args.n,
            "r": args.r,
            "k": args.k,
            "form_degree": space.form_degree,
            "basis": [form_to_json(b) for b in space],
        }
        print(json.dumps(payload))
        return EXIT_OK
    width = len(str(space.dim))
    for j, b in enumerate(space, start=1):
        print(f"{j:>{width}}: {format_form(b, basis=args.basis)}")
    if not space.dim:
        print("(zero space)")
    return EXIT_OK


def cmd_apply(args) -> int:
    if args.op == "hr":
        if args.r is None:
            raise ValueError("--op hr needs --r")
        a = parse_form(args.expr, args.n, on_T=True)
        result = calculus.h_r(a, args.r)
    else:
        alpha = parse_form(args.expr, args.n)
        result = OPERATORS[args.op](alpha)
    _emit_form(result, args)
    return EXIT_OK


def pairing_spaces(family: str, n: int, r: int, k: int):
    if family == "Pminus":
        return basis_Pminus(n, r, k), ring_subspace(basis_P(n, r + k, n - k))
    if family == "P":
        return basis_P(n, r, k), ring_subspace(basis_Pminus(n, r + k + 1, n - k))
    return basis_H(n, r, k), ring_subspace(basis_H(n, r + k, n + 1 - k))


def cmd_pair(args) -> int:
    A, B = pairing_spaces(args.family, args.n, args.r, args.k)
    M = pairing_matrix(A, B)
    if args.csv:
        if M.entries:
            print(M.to_csv())
        return EXIT_OK
    det = M.determinant() if M.is_square else None
    if args.json:
        payload = {
            "rows": A.label,
            "cols": B.label,
            "shape": list(M.shape),
            "rank": M.rank(),
            "determinant": None if det is None else str(det),
            "nondegenerate": M.is_nondegenerate(),
            "entries": [[str(x) for x in row] for row in M.entries],
        }
        print(json.dumps(payload))
        return EXIT_OK
    print(f"rows: {A.label}  dim {A.dim}")
    print(f"cols: {B.label}  dim {B.dim}")
    print(f"shape: {M.shape[0]}x{M.shape[1]}")
    print(f"rank: {M.rank()}")
    print(f"determinant: {'n/a' if det is None else det}")
    print(f"nondegenerate: {'yes' if M.is_nondegenerate() else 'no'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = max_cells_from_env()
    results = []
    for res in run_suite(args.n, args.max_r, cap):
        results.append(res)
        if not args.json:
            print(res.line(), flush=True)
    failed = [r for r in results if not r.passed]
    if args.json:
        payload = {
            "n": args.n,
            "max_r": args.max_r,
            "max_cells": cap,
            "checks": [
                {"name": r.name, "r": r.r, "k": r.k, "passed": r.passed, "detail": r.detail} for r in results
            ],
            "failed": len(failed),
        }
        print(json.dumps(payload))
    else:
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if cap is not None:
        print(f"grid capped at {cap} cells by FEEC_MAX_CELLS", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="feec",
        description="Homogeneous polynomial differential forms on the orthant and the simplex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p, *, r_required=True, k=True):
        p.add_argument("--n", type=int, required=True, help="simplex dimension")
        p.add_argument("--r", type=int, required=r_required, help="polynomial degree")
        if k:
            p.add_argument("--k", type=int, required=True, help="form degree label")

    def output(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--basis",
            choices=("auto", "dx", "ds"),
            default="auto",
            help="covector basis for printing (default: auto)",
        )

    p = sub.add_parser("dim", help="dimension of a space")
    params(p)
    p.add_argument("--space", choices=KINDS, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("basis", help="list a basis")
    params(p)
    p.add_argument("--space", choices=KINDS, required=True)
    output(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("apply", help="apply an operator to a form")
    p.add_argument("--op", choices=sorted(OPERATORS), required=True)
    params(p, r_required=False, k=False)
    output(p)
    p.add_argument("expr", help="form expression, e.g. 'y*dx - x*dy'")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("pair", help="pairing matrix between dual spaces")
    params(p)
    p.add_argument("--family", choices=("P", "Pminus", "H"), default="Pminus")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="print only the matrix as CSV")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        caret = exc.caret()
        if caret:
            print(caret, file=sys.stderr)
        return EXIT_PARSE
    except (FeecError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
