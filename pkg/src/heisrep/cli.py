"""Command-line front end.

All verbs print a JSON run report to stdout (``--pretty`` for an
indented version) and exit 0 exactly when every check in the
invocation passed.  Errors go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .jordan import jordan_chevalley
from .lie import current_algebra, direct_sum, heisenberg
from .linalg import QMatrix
from .poly import Polynomial, PolyParseError, QuotientAlgebra, parse_poly
from .reps import (
    Representation,
    check_homomorphism,
    is_faithful,
    make_AB,
    min_sum,
    minimal_faithful,
    mu_formula,
    pi_AB,
)
from .schur import NilFamily, schur_decompose, verify_schur
from .suite import run_suite

__all__ = ["main"]


def _report(command: str, inputs: dict, results: dict, started: float) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "elapsed": round(time.monotonic() - started, 6),
    }


def _emit(report: dict, pretty: bool):
    if pretty:
        print(json.dumps(report, indent=2))
    else:
        print(json.dumps(report))


def _parse_modulus(text: str) -> QuotientAlgebra:
    p = parse_poly(text)
    if p.degree < 1:
        raise SystemExit(f"error: polynomial {text!r} must have degree >= 1")
    return QuotientAlgebra(p)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SystemExit(f"error: cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise SystemExit(f"error: {path} is not valid JSON: {exc}")


def _write_json(path: str, data: dict):
    try:
        with open(path, "w") as fh:
            json.dump(data, fh)
            fh.write("\n")
    except OSError as exc:
        raise SystemExit(f"error: cannot write {path}: {exc}")


def cmd_mu(args) -> int:
    started = time.monotonic()
    Q = _parse_modulus(args.p)
    d = Q.dim
    a, b = min_sum(d)
    results = {
        "mu": mu_formula(args.m, d),
        "a": a,
        "b": b,
        "deg_p": d,
        "dim": (2 * args.m + 1) * d,
    }
    _emit(_report("mu", {"m": args.m, "p": args.p}, results, started), args.pretty)
    return 0


def cmd_construct(args) -> int:
    started = time.monotonic()
    Q = _parse_modulus(args.p)
    d = Q.dim
    if (args.a is None) != (args.b is None):
        raise SystemExit("error: -a and -b must be given together")
    if args.a is None:
        a, b = min_sum(d)
    else:
        a, b = args.a, args.b
    rep = pi_AB(args.m, Q, make_AB(d, a, b))
    faithful = is_faithful(rep)
    if args.out:
        _write_json(args.out, rep.to_json())
    results = {
        "degree": rep.degree,
        "a": a,
        "b": b,
        "is_faithful": faithful,
        "out": args.out,
    }
    inputs = {"m": args.m, "p": args.p, "a": args.a, "b": args.b}
    _emit(_report("construct", inputs, results, started), args.pretty)
    return 0


def cmd_verify(args) -> int:
    started = time.monotonic()
    data = _load_json(args.rep)
    try:
        rep = Representation.from_json(data)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    hom = check_homomorphism(rep)
    faithful = is_faithful(rep) if hom else False
    results = {"homomorphism": hom, "faithful": faithful, "degree": rep.degree}
    _emit(_report("verify", {"rep": args.rep}, results, started), args.pretty)
    return 0 if hom else 1


def cmd_jordan(args) -> int:
    started = time.monotonic()
    data = _load_json(args.matrix)
    try:
        M = QMatrix.from_json(data)
        pair = jordan_chevalley(M)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    results = {"S": pair.semisimple.to_json(), "N": pair.nilpotent.to_json()}
    _emit(_report("jordan", {"matrix": args.matrix}, results, started), args.pretty)
    return 0


def cmd_schur(args) -> int:
    started = time.monotonic()
    data = _load_json(args.family)
    try:
        space_dim = data["space_dim"]
        basis = [QMatrix.from_json(M) for M in data["basis"]]
        idxs = data.get("distinguished", [])
        family = NilFamily(space_dim, basis)
        distinguished = [basis[i] for i in idxs]
        dec = schur_decompose(family, distinguished)
        ok = verify_schur(family, dec)
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise SystemExit(f"error: {exc}")
    results = {
        "s": dec.block_count,
        "verified": ok,
        "vectors": [[_frac_json(x) for x in v] for v in dec.vectors],
        "blocks": [[[_frac_json(x) for x in c] for c in blk] for blk in dec.blocks],
    }
    _emit(_report("schur", {"family": args.family}, results, started), args.pretty)
    return 0 if ok else 1


def _frac_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_lie_build(args) -> int:
    started = time.monotonic()
    if not args.p:
        g = heisenberg(args.m)
    else:
        parts = [current_algebra(heisenberg(args.m), _parse_modulus(p)) for p in args.p]
        g = direct_sum(parts)
    data = g.to_json()
    if args.out:
        _write_json(args.out, data)
        results = {"dim": g.dim, "out": args.out}
    else:
        results = {"dim": g.dim, "algebra": data}
    inputs = {"m": args.m, "p": args.p}
    _emit(_report("lie build", inputs, results, started), args.pretty)
    return 0


def cmd_suite(args) -> int:
    started = time.monotonic()
    results = run_suite(quick=args.quick, seed=args.seed)
    payload = {
        r.name: {"passed": r.passed, "details": r.details} for r in results
    }
    ok = all(r.passed for r in results)
    inputs = {"quick": args.quick, "seed": args.seed}
    _emit(_report("suite", inputs, {"checks": payload, "all_passed": ok}, started), args.pretty)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heisrep",
        description="Minimal faithful representations of current Heisenberg Lie algebras.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON report")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_mu = sub.add_parser("mu", help="minimal faithful dimension and the optimal (a, b)")
    p_mu.add_argument("-m", type=int, required=True)
    p_mu.add_argument("-p", required=True, help='polynomial, e.g. "t^2+1"')
    p_mu.set_defaults(func=cmd_mu)

    p_con = sub.add_parser("construct", help="build a blocked representation and write it as JSON")
    p_con.add_argument("-m", type=int, required=True)
    p_con.add_argument("-p", required=True)
    p_con.add_argument("-a", type=int)
    p_con.add_argument("-b", type=int)
    p_con.add_argument("--out", help="output path for the representation JSON")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="check a representation file for homomorphism/faithfulness")
    p_ver.add_argument("rep", help="path to a representation JSON file")
    p_ver.set_defaults(func=cmd_verify)

    p_jor = sub.add_parser("jordan", help="semisimple + nilpotent decomposition of a matrix file")
    p_jor.add_argument("matrix", help="path to a matrix JSON file")
    p_jor.set_defaults(func=cmd_jordan)

    p_sch = sub.add_parser("schur", help="decompose a commuting nilpotent family file")
    p_sch.add_argument("family", help="path to a family JSON file")
    p_sch.set_defaults(func=cmd_schur)

    p_lie = sub.add_parser("lie", help="Lie algebra utilities")
    lie_sub = p_lie.add_subparsers(dest="lie_verb", required=True)
    p_build = lie_sub.add_parser("build", help="emit h_m, h_{m,p} or direct sums as JSON")
    p_build.add_argument("-m", type=int, required=True)
    p_build.add_argument("-p", action="append", help="repeatable; each factor adds a summand")
    p_build.add_argument("--out")
    p_build.set_defaults(func=cmd_lie_build)

    p_suite = sub.add_parser("suite", help="run the verification grid")
    p_suite.add_argument("--quick", action="store_true", help="small grid (d <= 4, m <= 2)")
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    m = getattr(args, "m", None)
    if m is not None and m < 1:
        print("error: -m must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
