"""Command-line front end.

Subcommands:
  radius      solve one catalog equation and report the root as JSON
  membership  class-membership report for a named or literal function
  verify-all  run every verification record; exit 0 only if all pass
  plot        write an r,value CSV sweep of a catalog equation

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numerical failure (no bracket, missing tail bound, uncertified input),
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bohr, radii, verify
from .catalog import parse_function_spec
from .classes import ClassId, certificate_sufficient, quartic_necessary, sup_defect
from .errors import (
    ArgumentOutOfRange,
    NearZeroConstantTerm,
    NoBracketFound,
    NoClosedForm,
    NotCertifiedOmegaA,
    NotSchwarzBounded,
    ParamOutOfRange,
    ParseError,
    TailBoundUnavailable,
    UnknownEquation,
    ZeroDenominator,
)
from .series import default_order

SCHEMA_VERSION = 1

_USAGE_ERRORS = (UnknownEquation, ParseError, ParamOutOfRange, ArgumentOutOfRange)
_NUMERICAL_ERRORS = (
    NoBracketFound,
    NoClosedForm,
    TailBoundUnavailable,
    NotCertifiedOmegaA,
    NotSchwarzBounded,
    ZeroDenominator,
    NearZeroConstantTerm,
)


def _equation_params(args) -> dict:
    params = {}
    if args.lam is not None:
        params["lam"] = args.lam
    if args.lam2 is not None:
        params["lam2"] = args.lam2
    if args.mu is not None:
        params["mu"] = args.mu
    return params


def _emit(payload: dict) -> None:
    print(json.dumps(payload))


def _cmd_radius(args) -> int:
    params = _equation_params(args)
    entry = radii.get_equation(args.eq, **params)
    root = radii.solve_radius(args.eq, args.tol, **params)
    payload = {
        "schema": SCHEMA_VERSION,
        "eq_id": args.eq,
        "params": entry.params,
        "root": root,
        "tol": args.tol,
        "expected": entry.expected_root,
    }
    if entry.closed_form_value is not None:
        payload["closed_form"] = entry.closed_form_value
    uncertainty = radii.root_uncertainty(args.eq, root, **params)
    if uncertainty is not None:
        payload["uncertainty"] = uncertainty
    _emit(payload)
    return 0


def _cmd_membership(args) -> int:
    order = args.order if args.order is not None else default_order()
    rep = parse_function_spec(args.f, order)
    class_id = ClassId(args.cls, args.lam if args.lam is not None else 1.0)
    payload = {
        "schema": SCHEMA_VERSION,
        "function": args.f,
        "class": args.cls,
        "lambda": class_id.lam,
        "order": order,
    }
    certificates = {}
    if class_id.tag in ("M", "OmegaA"):
        cert = certificate_sufficient(rep, class_id)
        certificates["sum_sufficient"] = {
            "value": cert.value,
            "bound": cert.bound,
            "holds": cert.holds,
        }
    if class_id.tag == "M":
        cert = quartic_necessary(rep)
        certificates["quartic_necessary"] = {
            "value": cert.value,
            "bound": cert.bound,
            "holds": cert.holds,
        }
    if class_id.tag != "OmegaA":
        report = sup_defect(rep, class_id, args.r, args.samples)
        payload.update(
            {
                "r": args.r,
                "samples": args.samples,
                "verdict": report.verdict,
                "sup_sampled": report.sup_sampled,
                "tail_bound": report.tail_bound,
                "threshold": class_id.threshold,
            }
        )
    payload["certificates"] = certificates
    _emit(payload)
    return 0


def _cmd_verify_all(args) -> int:
    order = args.order if args.order is not None else default_order()
    records = verify.run_all(order)
    failed = [rec for rec in records if not rec.passed]
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "order": order,
            "records": [
                {
                    "item": rec.item,
                    "expected": rec.expected,
                    "computed": rec.computed,
                    "abs_diff": rec.abs_diff,
                    "tolerance": rec.tolerance,
                    "provenance": rec.provenance,
                    "pass": rec.passed,
                }
                for rec in records
            ],
            "failures": len(failed),
        }
        _emit(payload)
    else:
        width = max(len(rec.item) for rec in records)
        for rec in records:
            status = "PASS" if rec.passed else "FAIL"
            print(
                f"{status}  {rec.item:<{width}}  computed={rec.computed:.10g}"
                f"  expected={rec.expected:.10g}  diff={rec.abs_diff:.3g}"
                f"  tol={rec.tolerance:.3g}"
            )
        print(f"{len(records) - len(failed)}/{len(records)} records passed")
    return 1 if failed else 0


def _cmd_plot(args) -> int:
    if args.step <= 0.0:
        raise ParamOutOfRange(f"step must be positive, got {args.step}")
    if not 0.0 < args.r_min <= args.r_max < 1.0:
        raise ParamOutOfRange(
            f"need 0 < r_min <= r_max < 1, got [{args.r_min}, {args.r_max}]"
        )
    params = _equation_params(args)
    entry = radii.get_equation(args.eq, **params)
    rows = []
    k = 0
    while (r := args.r_min + k * args.step) <= args.r_max + 1e-15:
        rows.append((r, entry.evaluate(r)))
        k += 1
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("r,value\n")
            for r, value in rows:
                fh.write(f"{r!r},{value!r}\n")
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 4
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radii-lab",
        description="Reproduce radius constants and membership checks for "
        "coefficient-defined classes of analytic functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_equation_flags(p):
        p.add_argument("--eq", required=True, help="equation id, e.g. theo1, t1, bohrG2")
        p.add_argument("--lambda", dest="lam", type=float, default=None)
        p.add_argument("--lambda2", dest="lam2", type=float, default=None)
        p.add_argument("--mu", type=float, default=None)

    p_radius = sub.add_parser("radius", help="solve one radius equation")
    add_equation_flags(p_radius)
    p_radius.add_argument("--tol", type=float, default=1e-12)
    p_radius.set_defaults(func=_cmd_radius)

    p_member = sub.add_parser("membership", help="class membership report")
    p_member.add_argument("--f", required=True, help="catalog name, coeffs:..., or zoverf:...")
    p_member.add_argument(
        "--class", dest="cls", required=True, choices=("M", "U", "P", "Omega", "OmegaA")
    )
    p_member.add_argument("--lambda", dest="lam", type=float, default=None)
    p_member.add_argument("--r", type=float, default=0.9)
    p_member.add_argument("--samples", type=int, default=4096)
    p_member.add_argument("--order", type=int, default=None)
    p_member.set_defaults(func=_cmd_membership)

    p_verify = sub.add_parser("verify-all", help="run every verification record")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify_all)

    p_plot = sub.add_parser("plot", help="write an r,value CSV sweep")
    add_equation_flags(p_plot)
    p_plot.add_argument("--r-min", type=float, default=0.001)
    p_plot.add_argument("--r-max", type=float, default=0.999)
    p_plot.add_argument("--step", type=float, default=0.001)
    p_plot.add_argument("--out", required=True)
    p_plot.set_defaults(func=_cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except _NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
