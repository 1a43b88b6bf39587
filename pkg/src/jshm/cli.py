"""Command-line front door.

Machine-readable JSON goes to standard output (keys sorted, rationals as
"p/q" strings, byte-identical across repeated invocations); short human
summaries go to standard error.  Exit codes: 0 success or verified, 1
verification failed on valid input, 2 invalid input, 3 budget exhausted.
The JSHM_BUDGET environment variable sets the default search budget in
node expansions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import designs, identity, johnson, oracles, projection, wilson
from .exact import rat_from_str, rat_to_str
from .johnson import SchemeParams, SizeBudgetError
from .subsets import family_to_dict, load_family

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _emit(payload: dict, summary: str) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    if summary:
        sys.stderr.write(summary + "\n")


def _default_budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("JSHM_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"JSHM_BUDGET must be an integer, got {env!r}") from exc
    return designs.DEFAULT_SEARCH_BUDGET


def _cmd_scheme(args) -> int:
    es = johnson.eigensystem(SchemeParams(args.n, args.k))
    payload = {
        "n": args.n,
        "k": args.k,
        "theta1": [rat_to_str(x) for x in es.theta1],
        "P": [[rat_to_str(x) for x in row] for row in es.P],
        "m": list(es.m),
    }
    _emit(payload, f"eigenvalue table of J({args.n},{args.k}): "
                   f"{args.k + 1} eigenspaces, order {es.params.order}")
    return EXIT_OK


def _cmd_wilson_omega(args) -> int:
    v = wilson.wilson_matrix(args.n, args.k, args.t, args.variant)
    payload = {"n": args.n, "k": args.k,
               "coeffs": [rat_to_str(c) for c in v.coeffs]}
    _emit(payload, f"Wilson matrix ({args.variant}) for "
                   f"(n,k,t)=({args.n},{args.k},{args.t})")
    return EXIT_OK


def _cmd_wilson_certify(args) -> int:
    cert = wilson.ekr_certificate(args.n, args.k, args.t, args.variant)
    _emit(cert.to_dict(),
          f"certificate {'valid' if cert.valid else 'INVALID'}: "
          f"bound {cert.bound}, min eigenvalue {rat_to_str(cert.min_eigenvalue)}")
    return EXIT_OK if cert.valid else EXIT_FAILED


def _cmd_project(args) -> int:
    fam = load_family(args.file)
    report = projection.family_lemma_report(fam, args.t)
    _emit(report.to_dict(),
          f"family of {fam.size} blocks: "
          f"{'verified' if report.verified else 'not verified'} at t={args.t}")
    return EXIT_OK if report.verified else EXIT_FAILED


def _cmd_design_verify(args) -> int:
    fam = load_family(args.file)
    try:
        lam = designs.verify_design(fam, args.t)
    except designs.NotADesignError as exc:
        payload = family_to_dict(fam)
        payload["t"] = args.t
        payload["lambda"] = None
        payload["witness"] = {
            "subset": list(exc.witness),
            "count": exc.count,
            "expected": exc.expected,
        }
        _emit(payload, f"not a {args.t}-design: {exc}")
        return EXIT_FAILED
    payload = family_to_dict(fam)
    payload["t"] = args.t
    payload["lambda"] = lam
    _emit(payload, f"verified {args.t}-({fam.n},{fam.k},{lam}) design")
    return EXIT_OK


def _cmd_design_search(args) -> int:
    outcome = designs.search_design(args.n, args.k, args.t, _default_budget(args))
    if outcome.status == "found":
        payload = outcome.design.to_dict()
        payload["nodes"] = outcome.nodes
        _emit(payload, f"found {outcome.design.size}-block "
                       f"{args.t}-({args.n},{args.k},1) design "
                       f"({outcome.nodes} nodes)")
        return EXIT_OK
    payload = {"n": args.n, "k": args.k, "t": args.t, "found": False,
               "exhausted": outcome.status == "not-found", "nodes": outcome.nodes}
    if outcome.status == "not-found":
        _emit(payload, "search space exhausted: no such design")
        return EXIT_FAILED
    _emit(payload, f"budget exhausted after {outcome.nodes} nodes")
    return EXIT_BUDGET


def _cmd_design_admissible(args) -> int:
    if (args.n is None) == (args.n_max is None):
        raise ValueError("provide exactly one of --n and --n-max")
    if args.n is not None:
        payload = {"k": args.k, "t": args.t, "n": args.n,
                   "admissible": designs.admissible(args.n, args.k, args.t)}
        _emit(payload, f"divisibility conditions "
                       f"{'hold' if payload['admissible'] else 'fail'}")
    else:
        ns = designs.admissible_range(args.k, args.t, args.n_max)
        payload = {"k": args.k, "t": args.t, "n_max": args.n_max,
                   "admissible": ns}
        _emit(payload, f"{len(ns)} admissible sizes up to {args.n_max}")
    return EXIT_OK


_LHS_FLAGS = {"m": "m", "m-plus-i": "m_plus_i"}
_RHS_FLAGS = {"literal": "omega_literal", "corrected": "omega_corrected",
              "nabla": "nabla_corrected"}


def _cmd_identity_prove(args) -> int:
    report = identity.compare_symbolic(
        args.k, args.t, _LHS_FLAGS[args.lhs], _RHS_FLAGS[args.rhs]
    )
    _emit(report.to_dict(),
          f"symbolic comparison {report.lhs} vs {report.rhs}: "
          f"{'equal' if report.equal else 'NOT equal'}")
    return EXIT_OK if report.equal else EXIT_FAILED


def _cmd_identity_pointwise(args) -> int:
    report = identity.compare_pointwise(
        args.k, args.t, _LHS_FLAGS[args.lhs], _RHS_FLAGS[args.rhs],
        args.n_from, args.n_to,
    )
    _emit(report.to_dict(),
          f"pointwise comparison on [{args.n_from},{args.n_to}]: "
          f"{report.points_equal}/{report.points_checked} equal, "
          f"verdict {'equal' if report.equal else 'not equal'}")
    return EXIT_OK if report.equal else EXIT_FAILED


def _cmd_identity_witness(args) -> int:
    report = identity.design_witness_check(args.k, args.t, args.n,
                                           _default_budget(args))
    statuses = [p.status for p in report.points]
    _emit(report.to_dict(), "witness statuses: " + ", ".join(
        f"n={p.n}:{p.status}" for p in report.points))
    if "failed" in statuses:
        return EXIT_FAILED
    if "unverified" in statuses:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_oracle_max_family(args) -> int:
    result = oracles.max_family(args.n, args.k, args.t, _default_budget(args))
    _emit(result.to_dict(),
          f"max {args.t}-intersecting family in J({args.n},{args.k}): "
          f"size {result.size} ({'optimal' if result.optimal else 'budget hit'})")
    return EXIT_OK if result.optimal else EXIT_BUDGET


def _cmd_oracle_spectrum(args) -> int:
    params = SchemeParams(args.n, args.k)
    coeffs = tuple(rat_from_str(c) for c in args.coeffs.split(","))
    v = johnson.BMVector(params, coeffs)
    spectrum = oracles.float_spectrum(johnson.dense(v, args.max_order))
    payload = {"n": args.n, "k": args.k,
               "coeffs": [rat_to_str(c) for c in coeffs],
               "spectrum": spectrum}
    _emit(payload, f"float spectrum of a {params.order}x{params.order} matrix")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jshm",
        description="Exact certificates in the Johnson scheme: Wilson matrix, "
                    "design projections, intersecting-family bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scheme", help="exact eigenvalue table of J(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_scheme)

    w = sub.add_parser("wilson", help="Wilson matrix and EKR certificates")
    wsub = w.add_subparsers(dest="subcommand", required=True)
    p = wsub.add_parser("omega", help="coefficients of the Wilson matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--variant", choices=wilson.VARIANTS, default="corrected")
    p.set_defaults(func=_cmd_wilson_omega)
    p = wsub.add_parser("certify", help="build and verify an EKR certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--variant", choices=wilson.VARIANTS, default="corrected")
    p.set_defaults(func=_cmd_wilson_certify)

    p = sub.add_parser("project", help="project a family file onto the algebra")
    p.add_argument("--file", required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_project)

    d = sub.add_parser("design", help="verify, search, admissibility")
    dsub = d.add_subparsers(dest="subcommand", required=True)
    p = dsub.add_parser("verify", help="verify a family file as a t-design")
    p.add_argument("--file", required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_design_verify)
    p = dsub.add_parser("search", help="exact-cover search for a t-(n,k,1) design")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_design_search)
    p = dsub.add_parser("admissible", help="divisibility admissibility")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(func=_cmd_design_admissible)

    i = sub.add_parser("identity", help="design matrix vs Wilson matrix")
    isub = i.add_subparsers(dest="subcommand", required=True)
    p = isub.add_parser("prove", help="symbolic coefficient comparison")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--lhs", choices=sorted(_LHS_FLAGS), default="m")
    p.add_argument("--rhs", choices=sorted(_RHS_FLAGS), default="corrected")
    p.set_defaults(func=_cmd_identity_prove)
    p = isub.add_parser("pointwise", help="exact comparison over an integer range")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--lhs", choices=sorted(_LHS_FLAGS), default="m")
    p.add_argument("--rhs", choices=sorted(_RHS_FLAGS), default="corrected")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.set_defaults(func=_cmd_identity_pointwise)
    p = isub.add_parser("witness", help="verify through explicitly found designs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, action="append", required=True,
                   help="ground-set size to test (repeatable)")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_identity_witness)

    o = sub.add_parser("oracle", help="brute-force oracles")
    osub = o.add_subparsers(dest="subcommand", required=True)
    p = osub.add_parser("max-family", help="exact maximum t-intersecting family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_oracle_max_family)
    p = osub.add_parser("spectrum", help="float spectrum of an algebra element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coeffs", required=True,
                   help="comma-separated rationals c_0..c_k")
    p.add_argument("--max-order", type=int, default=johnson.DEFAULT_DENSE_BUDGET)
    p.set_defaults(func=_cmd_oracle_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeBudgetError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (ValueError, ZeroDivisionError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
