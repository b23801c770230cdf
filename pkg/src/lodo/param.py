"""Parametric operators: specialization and the generic factor system.

Specialization evaluates parameter polynomials at a point and fails loudly
when a denominator or the leading coefficient collapses.  The generic factor
system divides the cleared operator by an indeterminate monic factor ansatz
of order s whose coefficients are degree-nu polynomial quotients; the
recursion multiplies through by powers of the ansatz denominator q at every
step, so remainder denominators stay literal powers of q times the clearing
polynomial, with no cancellation anywhere.  The x-coefficients of the
remainder numerators form the obstruction set exported for external solvers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import npoly
from .errors import BadOrder, NotWellDefined
from .fields import FieldDescriptor
from .ore import DiffOp
from .ratfun import RatFun
from .scalar import Scalar
from .unipoly import UniPoly, poly_lcm

RECURSION_POLICY = "lemma-division:clear-lcd,multiply-q^(n-s+1):v1"


@dataclass(frozen=True)
class SpecPoint:
    """Total assignment of parameter names to generator-field scalars."""

    values: tuple  # tuple[(name, Scalar over the dropped-params field), ...]

    @staticmethod
    def make(field: FieldDescriptor, assignment: dict) -> "SpecPoint":
        target = field.drop_params()
        vals = []
        for name in field.params:
            if name not in assignment:
                raise NotWellDefined(f"no value for parameter {name!r}")
            v = assignment[name]
            if not isinstance(v, Scalar):
                v = Scalar.from_rational(target, v)
            if v.field != target:
                raise NotWellDefined(f"value for {name!r} lies outside the generator field")
            vals.append((name, v))
        return SpecPoint(tuple(vals))

    def alg_values(self) -> list:
        return [v.as_alg() for _, v in self.values]


@dataclass(frozen=True)
class GenericFactorSystem:
    s: int
    nu: int
    base_field: FieldDescriptor
    field: FieldDescriptor  # base parameters plus the t_{i,j} grid
    grid: tuple  # tuple[tuple[str, ...], ...], grid[i][j] names t_{i,j}
    q_poly: UniPoly
    p_polys: tuple  # tuple[UniPoly, ...], numerators of the ansatz coefficients
    clearing: UniPoly  # the polynomial a with a*L polynomial, lifted
    cleared_op: tuple  # tuple[UniPoly, ...], coefficients of a*L, lifted
    quotient: tuple  # tuple[UniPoly, ...], quotient numerators over q^m1
    m1: int
    remainder: tuple  # tuple[UniPoly, ...], remainder numerators r_0..r_{s-1}
    m2: int
    obstructions: tuple  # tuple[Scalar, ...], the x-coefficients of the r_i

    @property
    def indeterminates(self) -> list:
        return [name for row in self.grid for name in row]

    def side_conditions(self) -> list:
        return [f"{name} != 0" for name in self.grid[self.s]]


# -- specialization -------------------------------------------------------------


def _eval_scalar(c: Scalar, point: SpecPoint, target: FieldDescriptor,
                 where: str) -> Scalar:
    f = c.field
    m = f.nparams
    vals = point.alg_values()
    den = npoly.eval_params(f, m, m, vals, c.den)
    if target.alg_is_zero(den):
        raise NotWellDefined(f"denominator {c.render()[0]!r} vanishes in {where}")
    num = npoly.eval_params(f, m, m, vals, c.num)
    return Scalar.make(target, num, den)


def _eval_unipoly(p: UniPoly, point: SpecPoint, target: FieldDescriptor,
                  where: str) -> UniPoly:
    return UniPoly.make(target, [_eval_scalar(c, point, target, where) for c in p.coeffs])


def specialize(op: DiffOp, point: SpecPoint) -> DiffOp:
    """Coefficient-wise evaluation; the result lives over the parameter-free
    field.  Raises NotWellDefined naming the offending coefficient."""
    f = op.field
    target = f.drop_params()
    coeffs = []
    for i, b in enumerate(op.coeffs):
        where = f"coefficient of D^{i}"
        num = _eval_unipoly(b.num, point, target, where)
        den = _eval_unipoly(b.den, point, target, where)
        if den.is_zero():
            raise NotWellDefined(f"denominator of {where} vanishes")
        coeffs.append(RatFun.make(num, den))
    if not coeffs or coeffs[-1].is_zero():
        raise NotWellDefined("leading coefficient vanishes under specialization")
    return DiffOp.make(target, coeffs)


# -- clearing to polynomial form ---------------------------------------------------


def clearing_factor(op: DiffOp) -> tuple[UniPoly, list[UniPoly]]:
    """(a, coefficients of a*L): a = lcd over x times the parameter lcd."""
    f = op.field
    m = f.nparams
    ax = UniPoly.one(f)
    for b in op.coeffs:
        if not b.is_zero():
            ax = poly_lcm(ax, b.den)
    cleared = []
    for b in op.coeffs:
        q, _ = (b.num * ax).divmod(b.den)
        cleared.append(q)
    d = npoly.one(f, m)
    for p in cleared + [ax]:
        for c in p.coeffs:
            d = npoly.lcm(f, m, d, c.den)
    dscalar = Scalar.make(f, d)
    a = ax.scale(dscalar)
    return a, [p.scale(dscalar) for p in cleared]


# -- the generic division recursion ------------------------------------------------


def _grid_field(base: FieldDescriptor, s: int, nu: int) -> tuple[FieldDescriptor, tuple]:
    grid = tuple(tuple(f"t_{i}_{j}" for j in range(nu + 1)) for i in range(s + 1))
    flat = [n for row in grid for n in row]
    for n in flat:
        if n in base.params or n == base.generator:
            raise BadOrder(f"grid name {n} collides with a declared name")
    return base.with_params(base.params + tuple(flat)), grid


def _lift_unipoly(p: UniPoly, ext: FieldDescriptor) -> UniPoly:
    extra = ext.nparams - p.field.nparams
    return UniPoly(ext, tuple(
        Scalar(ext, npoly.lift(c.num, extra), npoly.lift(c.den, extra))
        for c in p.coeffs))


def _ansatz(ext: FieldDescriptor, grid, s: int, nu: int):
    """q and the p_i numerators of the ansatz factor over the grid field."""

    def var(name):
        return Scalar.param(ext, name)

    polys = []
    for i in range(s + 1):
        polys.append(UniPoly.make(ext, [var(grid[i][j]) for j in range(nu + 1)]))
    return polys[s], tuple(polys[:s])


class _Division:
    """Runs the multiply-through recursion for one (q, p_0..p_{s-1}) ansatz."""

    def __init__(self, field: FieldDescriptor, s: int, q: UniPoly, p_polys):
        self.field = field
        self.s = s
        self.q = q
        self.dq = q.derivative()
        self.p_polys = p_polys

    def _ansatz_derivatives(self, j: int, i: int) -> UniPoly:
        """Numerator D_{i,j} with (p_i/q)^(j) = D_{i,j} / q^(j+1)."""
        key = (i, j)
        cache = getattr(self, "_dcache", None)
        if cache is None:
            cache = {}
            self._dcache = cache
        if key in cache:
            return cache[key]
        if j == 0:
            out = self.p_polys[i]
        else:
            prev = self._ansatz_derivatives(j - 1, i)
            out = prev.derivative() * self.q - prev.scale(
                Scalar.from_rational(self.field, j)) * self.dq
        cache[key] = out
        return cache[key]

    def _shifted_ansatz(self, k: int) -> list[UniPoly]:
        """Coefficients of q^(k+1) * (D^k compose P), ascending in D."""
        f = self.field
        out = [UniPoly.zero(f) for _ in range(k + self.s + 1)]
        out[k + self.s] = self.q ** (k + 1)
        for i in range(self.s):
            for j in range(k + 1):
                c = math.comb(k, j)
                term = self._ansatz_derivatives(j, i).scale(
                    Scalar.from_rational(f, c)) * self.q ** (k - j)
                out[k - j + i] = out[k - j + i] + term
        return out

    def run(self, coeffs: list[UniPoly]) -> tuple[list[UniPoly], int, list[UniPoly], int]:
        """(quotient numerators, m1, remainder numerators, m2)."""
        f = self.field
        n = len(coeffs) - 1
        if n < self.s:
            rem = list(coeffs) + [UniPoly.zero(f)] * (self.s - len(coeffs))
            return [], 0, rem[: self.s], 0
        k = n - self.s
        lead = coeffs[-1]
        shifted = self._shifted_ansatz(k)
        qpow = self.q ** (k + 1)
        reduced = []
        for idx in range(n):  # the D^n term cancels exactly
            cur = coeffs[idx] if idx < len(coeffs) else UniPoly.zero(f)
            val = cur * qpow - lead * shifted[idx] if idx < len(shifted) else cur * qpow
            reduced.append(val)
        while reduced and reduced[-1].is_zero():
            reduced.pop()
        quo, m1, rem, m2 = self.run(reduced)
        step = k + 1
        new_m1 = m1 + step
        out_quo = list(quo) + [UniPoly.zero(f)] * (k + 1 - len(quo))
        out_quo[k] = out_quo[k] + lead * self.q ** new_m1
        return out_quo, new_m1, rem, m2 + step


def generic_division(op: DiffOp, s: int, nu: int, nu_cap: int = 12) -> GenericFactorSystem:
    """Divide the cleared operator by the generic monic order-s ansatz.

    nu == -1 selects the default n^4 * b(L) with the sound bound, capped at
    nu_cap.  Remainder numerators r_i and quotient numerators sit over the
    literal denominators a*q^m2 and a*q^m1.
    """
    n = op.order
    if not 1 <= s < n:
        raise BadOrder(f"need 1 <= s < {n}")
    if nu == -1:
        from .bounds import b_of

        nu = min(nu_cap, n ** 4 * b_of(op, "sound").b_value)
    if nu < 0:
        raise BadOrder("nu must be >= 0")
    base = op.field
    ext, grid = _grid_field(base, s, nu)
    a, cleared = clearing_factor(op)
    a_ext = _lift_unipoly(a, ext)
    cleared_ext = [_lift_unipoly(p, ext) for p in cleared]
    q, p_polys = _ansatz(ext, grid, s, nu)
    div = _Division(ext, s, q, p_polys)
    quo, m1, rem, m2 = div.run(cleared_ext)
    obstructions = []
    for r in rem:
        for c in r.coeffs:
            if not c.is_zero():
                obstructions.append(c)
    return GenericFactorSystem(
        s=s, nu=nu, base_field=base, field=ext, grid=grid,
        q_poly=q, p_polys=p_polys, clearing=a_ext,
        cleared_op=tuple(cleared_ext), quotient=tuple(quo), m1=m1,
        remainder=tuple(rem), m2=m2, obstructions=tuple(obstructions))


# -- specialization commutation -----------------------------------------------------


def _eval_inner_unipoly(p: UniPoly, values, base_m: int, tfield: FieldDescriptor) -> UniPoly:
    """Evaluate the base parameters of an extended-field polynomial, keep T."""
    f = p.field
    total = f.nparams
    keep = total - base_m
    out = []
    for c in p.coeffs:
        num = npoly.eval_params(f, total, base_m, values, c.num)
        den = npoly.eval_params(f, total, base_m, values, c.den)
        if npoly.is_zero(tfield, keep, den):
            raise NotWellDefined("parameter denominator vanishes inside the system")
        out.append(Scalar.make(tfield, num, den))
    return UniPoly.make(tfield, out)


def spec_commute_check(op: DiffOp, sys: GenericFactorSystem, point: SpecPoint) -> bool:
    """Does specializing the generic division reproduce the division of L^c?

    Requires the specialization to be well-defined and the clearing factor to
    survive (a^c != 0); with those preconditions the division identity
    specializes coefficient-wise, and re-running the recursion on (a*L)^c
    must give back exactly the specialized quotient and remainder data.
    """
    specialize(op, point)  # raises NotWellDefined when the point is bad
    base_m = sys.base_field.nparams
    vals = point.alg_values()
    tfield = sys.base_field.drop_params().with_params(tuple(sys.indeterminates))
    a_c = _eval_inner_unipoly(sys.clearing, vals, base_m, tfield)
    if a_c.is_zero():
        raise NotWellDefined("clearing polynomial vanishes at the point")
    cleared_c = [_eval_inner_unipoly(p, vals, base_m, tfield) for p in sys.cleared_op]
    while cleared_c and cleared_c[-1].is_zero():
        cleared_c.pop()
    q_c, p_c = _ansatz(tfield, sys.grid, sys.s, sys.nu)
    div = _Division(tfield, sys.s, q_c, p_c)
    quo2, m1_2, rem2, m2_2 = div.run(cleared_c)
    quo_c = [_eval_inner_unipoly(p, vals, base_m, tfield) for p in sys.quotient]
    rem_c = [_eval_inner_unipoly(p, vals, base_m, tfield) for p in sys.remainder]
    while quo_c and quo_c[-1].is_zero():
        quo_c.pop()
    while quo2 and quo2[-1].is_zero():
        quo2.pop()
    return (m1_2, m2_2) == (sys.m1, sys.m2) and quo2 == quo_c and rem2 == rem_c


# -- JSON export ------------------------------------------------------------------


def export_system(sys: GenericFactorSystem, path) -> None:
    """Write the obstruction system in the documented JSON schema."""
    from .opexpr import print_scalar

    payload = {
        "s": sys.s,
        "nu": sys.nu,
        "indeterminates": sys.indeterminates,
        "W": [{"poly": print_scalar(c)} for c in sys.obstructions],
        "side_conditions": sys.side_conditions(),
        "policy": RECURSION_POLICY,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
