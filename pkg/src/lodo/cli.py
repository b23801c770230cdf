"""Command-line front end.

Batch commands over operator expressions: ring arithmetic, certificate
searches, irreducibility verdicts, bound reports, specialization sweeps with
CSV output, and the generic-system JSON export.  Exit codes: 0 ok, 2 parse
error, 3 unsupported construction or arithmetic failure, 4 specialization
not well-defined.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .bounds import b_of, check_factor_bound, op_degree
from .errors import LodoError, NotWellDefined, ParseError
from .exterior import exterior_reduction, matrix_degree
from .fields import FieldDescriptor
from .irred import IRREDUCIBLE, REDUCIBLE, irreducible, proper_right_factors
from .opexpr import parse_min_poly, parse_op, parse_ratfun, parse_scalar, print_op, print_ratfun
from .ore import DiffOp, gcrd
from .param import SpecPoint, export_system, generic_division, spec_commute_check, specialize
from .riccati import expsols

PRESETS = {
    "bessel": ("D^2 + (1/x)*D + (x^2 - a^2)/x^2", ("a",)),
}


def _build_field(args) -> FieldDescriptor:
    gen, minpoly = None, ()
    if args.field:
        if ":" not in args.field:
            raise ParseError("--field expects gen:minpoly, e.g. i:i^2+1", 0)
        name, text = args.field.split(":", 1)
        gen = name.strip()
        minpoly = parse_min_poly(text.strip(), gen)
    params = tuple(p.strip() for p in args.params.split(",") if p.strip()) if args.params else ()
    if args.preset:
        if args.preset not in PRESETS:
            raise ParseError(f"unknown preset {args.preset!r}", 0)
        for p in PRESETS[args.preset][1]:
            if p not in params:
                params = params + (p,)
    try:
        return FieldDescriptor(gen, minpoly, params)
    except ValueError as e:
        raise ParseError(str(e), 0) from e


def _operator(args, field: FieldDescriptor) -> DiffOp:
    if args.preset:
        return parse_op(PRESETS[args.preset][0], field)
    if not args.operator:
        raise ParseError("missing operator expression", 0)
    return parse_op(args.operator, field)


def _apply_at(op: DiffOp, args) -> DiffOp:
    if not getattr(args, "at", None):
        return op
    field = op.field
    target = field.drop_params()
    assignment = {}
    for item in args.at:
        if "=" not in item:
            raise ParseError("--at expects name=value", 0)
        name, text = item.split("=", 1)
        assignment[name.strip()] = parse_scalar(text.strip(), target)
    return specialize(op, SpecPoint.make(field, assignment))


def _cmd_binary(args, kind: str) -> int:
    field = _build_field(args)
    a = parse_op(args.lhs, field)
    b = parse_op(args.rhs, field)
    if kind == "mul":
        print(print_op(a * b))
    elif kind == "rem":
        print(print_op(a.rdivide(b)[1]))
    elif kind == "quo":
        print(print_op(a.rdivide(b)[0]))
    elif kind == "gcrd":
        print(print_op(gcrd(a, b)))
    return 0


def _cmd_apply(args) -> int:
    field = _build_field(args)
    op = _apply_at(_operator(args, field), args)
    fun = parse_ratfun(args.function, op.field)
    print(print_ratfun(op.apply(fun)))
    return 0


def _cmd_expsols(args) -> int:
    field = _build_field(args)
    op = _apply_at(_operator(args, field), args)
    rep = expsols(op)
    for cert in rep.certificates:
        print(print_ratfun(cert.a))
    print(f"complete: {'true' if rep.complete else 'false'}")
    for r in rep.reasons:
        print(f"reason: {r}")
    return 0


def _cmd_irreducible(args) -> int:
    field = _build_field(args)
    op = _apply_at(_operator(args, field), args)
    if op.order == 1:
        print("Irreducible")
        return 0
    factors, complete, reasons = proper_right_factors(op)
    if factors:
        print("Reducible: " + "; ".join(print_op(p) for p in factors))
    elif complete:
        print("Irreducible")
    else:
        print("Inconclusive: " + "; ".join(reasons))
    return 0


def _cmd_exterior(args) -> int:
    field = _build_field(args)
    op = _apply_at(_operator(args, field), args)
    red = exterior_reduction(op, args.s)
    print(f"size: {len(red.system)}")
    print(f"scalar: {print_op(red.scalar_op)}")
    print(f"transform_degree: {matrix_degree(red.transform)}")
    return 0


def _cmd_bound(args) -> int:
    field = _build_field(args)
    op = _apply_at(_operator(args, field), args)
    rep = b_of(op, args.mode)
    for t in rep.terms:
        print(f"s={t.s} binom={t.binom} deg_T={t.transform_degree} "
              f"N={t.exp_bound} term={t.value}")
    print(f"b = {rep.b_value}")
    print(f"factor_bound = {rep.factor_bound}")
    print(f"mode = {rep.mode}")
    print(f"policy = {rep.policy}")
    return 0


def _cmd_specialize(args) -> int:
    field = _build_field(args)
    op = _operator(args, field)
    if not getattr(args, "at", None):
        raise ParseError("specialize requires --at name=value", 0)
    print(print_op(_apply_at(op, args)))
    return 0


def _sweep_row(op: DiffOp, name: str, text: str, parametric_report):
    field = op.field
    target = field.drop_params()
    t0 = time.perf_counter()
    try:
        value = parse_scalar(text, target)
    except ParseError:
        raise
    try:
        spec = specialize(op, SpecPoint.make(field, {name: value}))
    except NotWellDefined:
        ms = int((time.perf_counter() - t0) * 1000)
        return [text, "not-well-defined", "", "", "", "", str(ms)]
    if spec.order == 1:
        factors, complete = [], True
    else:
        factors, complete, _ = proper_right_factors(spec)
    status = "reducible" if factors else ("irreducible" if complete else "inconclusive")
    certs = ""
    fdeg = ""
    ok_par = ""
    ok_spec = ""
    if factors:
        certs = "; ".join(print_ratfun(-p.monic().coeff(0)) if p.order == 1
                          else print_op(p) for p in factors)
        fdeg = str(max(op_degree(p.monic()) for p in factors))
        spec_report = b_of(spec, "sound")
        ok_par = "true" if all(check_factor_bound(spec, p, parametric_report)
                               for p in factors) else "false"
        ok_spec = "true" if all(check_factor_bound(spec, p, spec_report)
                                for p in factors) else "false"
    ms = int((time.perf_counter() - t0) * 1000)
    return [text, status, certs, fdeg, ok_par, ok_spec, str(ms)]


def _cmd_sweep(args) -> int:
    field = _build_field(args)
    op = _operator(args, field)
    name = args.param
    if name not in field.params:
        raise ParseError(f"swept parameter {name!r} is not declared", 0)
    values = [v.strip() for v in args.values.split(",") if v.strip()]
    parametric_report = b_of(op, "sound")
    jobs = max(1, args.jobs)
    if jobs == 1:
        rows = [_sweep_row(op, name, v, parametric_report) for v in values]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_sweep_row, op, name, v, parametric_report)
                       for v in values]
            rows = [f.result() for f in futures]
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["value", "status", "certificates", "factor_degree",
                         "bound_ok_parametric", "bound_ok_specialized", "ms"])
        writer.writerows(rows)
    reducible_values = [r[0] for r in rows if r[1] == "reducible"]
    print(f"reducible {len(reducible_values)}/{len(rows)} at: "
          + ", ".join(reducible_values))
    return 0


def _cmd_generic_system(args) -> int:
    field = _build_field(args)
    op = _operator(args, field)
    sysd = generic_division(op, args.s, args.nu, nu_cap=args.nu_cap)
    export_system(sysd, args.out)
    print(f"s={sysd.s} nu={sysd.nu} |W|={len(sysd.obstructions)} "
          f"indeterminates={len(sysd.indeterminates)} -> {args.out}")
    return 0


def _common(sub):
    sub.add_argument("--field", default=None,
                     help="algebraic generator as gen:minpoly, e.g. i:i^2+1")
    sub.add_argument("--params", default=None,
                     help="comma-separated parameter names")
    sub.add_argument("--preset", default=None, help="named operator preset (bessel)")
    sub.add_argument("--at", action="append", default=None, metavar="NAME=VALUE",
                     help="specialize a parameter before running")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lodo",
                                 description="exact linear differential operator toolkit")
    subs = ap.add_subparsers(dest="command", required=True)
    for kind in ("mul", "rem", "quo", "gcrd"):
        sp = subs.add_parser(kind, help=f"{kind} of two operators")
        _common(sp)
        sp.add_argument("lhs")
        sp.add_argument("rhs")
    sp = subs.add_parser("apply", help="apply an operator to a rational function")
    _common(sp)
    sp.add_argument("operator", nargs="?")
    sp.add_argument("function")
    sp = subs.add_parser("expsols", help="exponential-solution certificates")
    _common(sp)
    sp.add_argument("operator", nargs="?")
    sp = subs.add_parser("irreducible", help="irreducibility verdict (orders 1..3)")
    _common(sp)
    sp.add_argument("operator", nargs="?")
    sp = subs.add_parser("exterior", help="exterior reduction to a scalar operator")
    _common(sp)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("operator", nargs="?")
    sp = subs.add_parser("bound", help="degree-bound report")
    _common(sp)
    sp.add_argument("--mode", choices=("sound", "empirical"), default="sound")
    sp.add_argument("operator", nargs="?")
    sp = subs.add_parser("specialize", help="evaluate parameters")
    _common(sp)
    sp.add_argument("operator", nargs="?")
    sp = subs.add_parser("sweep", help="specialization sweep to CSV")
    _common(sp)
    sp.add_argument("--param", required=True)
    sp.add_argument("--values", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("operator", nargs="?")
    sp = subs.add_parser("generic-system", help="export the obstruction system")
    _common(sp)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--nu", type=int, required=True,
                    help="coefficient degree cap; -1 selects n^4*b(L) capped")
    sp.add_argument("--nu-cap", type=int, default=12, dest="nu_cap")
    sp.add_argument("--out", required=True)
    sp.add_argument("operator", nargs="?")
    return ap


def run_command(argv) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        if args.command in ("mul", "rem", "quo", "gcrd"):
            return _cmd_binary(args, args.command)
        if args.command == "apply":
            return _cmd_apply(args)
        if args.command == "expsols":
            return _cmd_expsols(args)
        if args.command == "irreducible":
            return _cmd_irreducible(args)
        if args.command == "exterior":
            return _cmd_exterior(args)
        if args.command == "bound":
            return _cmd_bound(args)
        if args.command == "specialize":
            return _cmd_specialize(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "generic-system":
            return _cmd_generic_system(args)
        return 2
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NotWellDefined as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except LodoError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


def console_main() -> None:
    sys.exit(run_command(sys.argv[1:]))


main = run_command
