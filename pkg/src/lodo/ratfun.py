"""Reduced rational functions in x: the coefficient domain of operators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch
from .fields import FieldDescriptor
from .scalar import Scalar
from .unipoly import UniPoly, poly_gcd


@dataclass(frozen=True)
class RatFun:
    num: UniPoly
    den: UniPoly  # monic, coprime with num, nonzero

    @property
    def field(self) -> FieldDescriptor:
        return self.den.field

    # -- constructors -------------------------------------------------------

    @staticmethod
    def make(num: UniPoly, den: UniPoly) -> "RatFun":
        if num.field != den.field:
            raise FieldMismatch("rational function with mixed fields")
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            return RatFun(UniPoly.zero(num.field), UniPoly.one(num.field))
        if den.degree == 0:
            c = den.coeffs[0]
            if c.is_one():
                return RatFun(num, den)
            return RatFun(num.scale(c.inv()), UniPoly.one(num.field))
        f = num.field
        if f.nparams == 0 and f.ext_degree == 1:
            return _make_over_q(f, num, den)
        if all(c.is_zero() for c in den.coeffs[:-1]):
            # monomial denominator: cancellation is a coefficient shift
            val = 0
            while num.coeffs[val].is_zero():
                val += 1
            shift = min(val, den.degree)
            inv = den.lead.inv()
            num = UniPoly(f, tuple(c * inv for c in num.coeffs[shift:]))
            k = den.degree - shift
            if k == 0:
                return RatFun(num, UniPoly.one(f))
            zero = Scalar.zero(f)
            return RatFun(num, UniPoly(f, (zero,) * k + (Scalar.one(f),)))
        if num.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
                if den.degree == 0 or all(c.is_zero() for c in den.coeffs[:-1]):
                    return RatFun.make(num, den)
        lead = den.lead
        if not lead.is_one():
            inv = lead.inv()
            num = num.scale(inv)
            den = den.scale(inv)
        return RatFun(num, den)

    @staticmethod
    def from_poly(p: UniPoly) -> "RatFun":
        return RatFun(p, UniPoly.one(p.field))

    @staticmethod
    def from_scalar(c: Scalar) -> "RatFun":
        return RatFun.from_poly(UniPoly.constant(c))

    @staticmethod
    def from_rational(field: FieldDescriptor, q) -> "RatFun":
        return RatFun.from_scalar(Scalar.from_rational(field, Fraction(q)))

    @staticmethod
    def zero(field: FieldDescriptor) -> "RatFun":
        return RatFun(UniPoly.zero(field), UniPoly.one(field))

    @staticmethod
    def one(field: FieldDescriptor) -> "RatFun":
        return RatFun(UniPoly.one(field), UniPoly.one(field))

    @staticmethod
    def x(field: FieldDescriptor) -> "RatFun":
        return RatFun.from_poly(UniPoly.x(field))

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self.den.degree == 0 and self.num.degree == 0 and self.num.coeffs[0].is_one()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_scalar(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        if self.is_zero():
            return Scalar.zero(self.field)
        return self.num.coeffs[0]

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> UniPoly:
        if not self.is_poly():
            raise ValueError("rational function has a nontrivial denominator")
        return self.num

    # -- arithmetic -----------------------------------------------------------

    def _chk(self, other: "RatFun"):
        if self.field != other.field:
            raise FieldMismatch("rational functions over different fields")

    def __add__(self, other: "RatFun") -> "RatFun":
        self._chk(other)
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFun(self.num + other.num, self.den)
        return RatFun.make(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __mul__(self, other: "RatFun") -> "RatFun":
        self._chk(other)
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFun(self.num * other.num, self.den)
        return RatFun.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        self._chk(other)
        if other.is_zero():
            raise DivisionByZero("rational function division by zero")
        return RatFun.make(self.num * other.den, self.den * other.num)

    def inv(self) -> "RatFun":
        return RatFun.one(self.field) / self

    def __pow__(self, k: int) -> "RatFun":
        if k < 0:
            return self.inv() ** (-k)
        out = RatFun.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: Scalar) -> "RatFun":
        return RatFun.make(self.num.scale(c), self.den)

    def derivative(self) -> "RatFun":
        n, d = self.num, self.den
        if d.degree == 0:
            return RatFun(n.derivative(), d)
        # with g = gcd(d, d') and e = d/g: (n/d)' = (n'e - n*(d'/g)) / (d*e)
        dp = d.derivative()
        g = poly_gcd(d, dp)
        if g.degree == 0:
            return RatFun.make(n.derivative() * d - n * dp, d * d)
        e = d.divmod(g)[0]
        return RatFun.make(n.derivative() * e - n * dp.divmod(g)[0], d * e)

    def eval(self, p: Scalar) -> Scalar:
        dv = self.den.eval(p)
        if dv.is_zero():
            raise DivisionByZero("pole at evaluation point")
        return self.num.eval(p) / dv

    # -- degree data ------------------------------------------------------------

    def rat_degree(self) -> int:
        """max(deg num, deg den) in lowest terms; -1 for the zero function."""
        if self.is_zero():
            return -1
        return max(self.num.degree, self.den.degree)

    def degree_at_infinity(self) -> int:
        """Growth order at infinity: deg num - deg den (very negative for 0)."""
        if self.is_zero():
            return -(10**9)
        return self.num.degree - self.den.degree

    def lead_at_infinity(self) -> Scalar:
        if self.is_zero():
            return Scalar.zero(self.field)
        return self.num.lead / self.den.lead

    def valuation_at(self, p: Scalar) -> tuple[int, Scalar]:
        """(k, c): self = c*(x-p)^k*(1 + O(x-p)) at x = p; k may be negative."""
        if self.is_zero():
            raise ValueError("valuation of the zero function")
        vn, cn = self.num.valuation_at(p)
        vd, cd = self.den.valuation_at(p)
        return vn - vd, cn / cd

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        return self.render()[0]

    def render(self) -> tuple[str, str]:
        """(text, class) in the operator grammar; class as in Scalar.render."""
        num_s, num_cls = _poly_render(self.num)
        if self.den.degree == 0:
            return num_s, num_cls
        den_s, den_cls = _poly_render(self.den)
        num_w = f"({num_s})" if num_cls == "sum" else num_s
        den_w = f"({den_s})" if den_cls in ("sum", "product") else den_s
        return f"{num_w}/{den_w}", "fraction"

    def sort_key(self):
        return (tuple(c.sort_key() for c in self.num.coeffs),
                tuple(c.sort_key() for c in self.den.coeffs))


def _int_clear(coeffs: list) -> tuple[list, int]:
    """(integers, den) with coeffs == integers / den."""
    import math

    den = math.lcm(*[c.denominator for c in coeffs])
    return [int(c * den) for c in coeffs], den


def _int_content(v: list) -> int:
    import math

    g = 0
    for c in v:
        g = math.gcd(g, c)
    return g or 1


def _int_gcd_poly(a: list, b: list) -> list:
    """Primitive gcd of integer coefficient lists (primitive PRS)."""
    a = [c // _int_content(a) for c in a]
    b = [c // _int_content(b) for c in b]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = list(a)
        nb = len(b)
        lead = b[-1]
        while len(r) >= nb:
            lr = r[-1]
            k = len(r) - nb
            r = [c * lead for c in r]
            for i, bc in enumerate(b):
                r[i + k] -= lr * bc
            while r and r[-1] == 0:
                r.pop()
        g = _int_content(r)
        a, b = b, [c // g for c in r]
    return a


def _int_divexact(a: list, b: list) -> list:
    """Exact quotient of integer polynomials (b primitive, b | a)."""
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    nb = len(b)
    lead = b[-1]
    while len(r) >= nb:
        q, rr = divmod(r[-1], lead)
        if rr:
            # content of a sits in the quotient; fall back to fractions
            return []
        k = len(r) - nb
        out[k] = q
        for i, bc in enumerate(b):
            r[i + k] -= q * bc
        while r and r[-1] == 0:
            r.pop()
    return out


def _make_over_q(f, num: UniPoly, den: UniPoly) -> RatFun:
    """Reduction over plain Q in integer arithmetic end to end."""
    nvals, nden = _int_clear([c.num[0] for c in num.coeffs])
    dvals, dden = _int_clear([c.num[0] for c in den.coeffs])
    # value = (nvals/nden) / (dvals/dden) = (dden/nden) * nvals/dvals
    ncont, dcont = _int_content(nvals), _int_content(dvals)
    nvals = [c // ncont for c in nvals]
    dvals = [c // dcont for c in dvals]
    mult = Fraction(dden * ncont, nden * dcont)
    if len(nvals) > 1 or len(dvals) > 1:
        g = _int_gcd_poly(nvals, dvals)
        if len(g) > 1:
            q1 = _int_divexact(nvals, g)
            q2 = _int_divexact(dvals, g)
            if q1 and q2:
                nvals, dvals = q1, q2
    lead = dvals[-1]
    mult = mult / lead
    one = f.alg_one()
    num_scalars = tuple(Scalar(f, (c * mult,), one) for c in nvals)
    den_scalars = tuple(Scalar(f, (Fraction(c, lead),), one) for c in dvals)
    return RatFun(UniPoly(f, num_scalars), UniPoly(f, den_scalars))


def _poly_render(p: UniPoly) -> tuple[str, str]:
    if p.is_zero():
        return "0", "atom"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c.is_zero():
            continue
        sign, mag = c.sign_split()
        mag_s, mag_cls = mag.render()
        xpart = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not xpart:
            body = f"({mag_s})" if mag_cls == "sum" else mag_s
        elif mag.is_one():
            body = xpart
        else:
            coeff_w = f"({mag_s})" if mag_cls in ("sum", "fraction") else mag_s
            body = f"{coeff_w}*{xpart}"
        terms.append(("-" if sign < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    if len(terms) > 1 or terms[0][0] == "-":
        cls = "sum"
    elif "*" in terms[0][1] or "(" in terms[0][1]:
        cls = "product"
    elif "^" in terms[0][1]:
        cls = "power"
    else:
        cls = "atom"
    return out, cls
