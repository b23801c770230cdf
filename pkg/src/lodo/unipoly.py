"""Univariate polynomials in x over the scalar field.

Coefficients are ascending; the zero polynomial has an empty coefficient
tuple and degree -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch
from .fields import FieldDescriptor
from .scalar import Scalar

_FR0 = Fraction(0)


def _from_algs(field: FieldDescriptor, vals: list) -> "UniPoly":
    """Build from raw AlgNum coefficients (parameter-free fields only)."""
    while vals and field.alg_is_zero(vals[-1]):
        vals.pop()
    one = field.alg_one()
    return UniPoly(field, tuple(Scalar(field, v, one) for v in vals))


@dataclass(frozen=True)
class UniPoly:
    field: FieldDescriptor
    coeffs: tuple  # tuple[Scalar, ...], ascending, no trailing zeros

    # -- constructors -------------------------------------------------------

    @staticmethod
    def make(field: FieldDescriptor, coeffs) -> "UniPoly":
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return UniPoly(field, tuple(cs))

    @staticmethod
    def zero(field: FieldDescriptor) -> "UniPoly":
        return UniPoly(field, ())

    @staticmethod
    def one(field: FieldDescriptor) -> "UniPoly":
        return UniPoly(field, (Scalar.one(field),))

    @staticmethod
    def x(field: FieldDescriptor) -> "UniPoly":
        return UniPoly(field, (Scalar.zero(field), Scalar.one(field)))

    @staticmethod
    def constant(c: Scalar) -> "UniPoly":
        if c.is_zero():
            return UniPoly(c.field, ())
        return UniPoly(c.field, (c,))

    @staticmethod
    def from_ints(field: FieldDescriptor, ints) -> "UniPoly":
        return UniPoly.make(field, [Scalar.from_rational(field, Fraction(c)) for c in ints])

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Scalar.zero(self.field)

    @property
    def lead(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _chk(self, other: "UniPoly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._chk(other)
        f = self.field
        if f.nparams == 0:
            A = [c.num for c in self.coeffs]
            B = [c.num for c in other.coeffs]
            if len(A) < len(B):
                A, B = B, A
            out = list(A)
            aadd = f.alg_add
            for i, y in enumerate(B):
                out[i] = aadd(out[i], y)
            return _from_algs(f, out)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.make(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._chk(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(self.field)
        f = self.field
        if f.nparams == 0:
            if f.ext_degree == 1:
                A = [c.num[0] for c in self.coeffs]
                B = [c.num[0] for c in other.coeffs]
                out = [_FR0] * (len(A) + len(B) - 1)
                for i, x in enumerate(A):
                    if x.numerator:
                        for j, y in enumerate(B):
                            out[i + j] += x * y
                return _from_algs(f, [(v,) for v in out])
            A = [c.num for c in self.coeffs]
            B = [c.num for c in other.coeffs]
            zero = f.alg_zero()
            out = [zero] * (len(A) + len(B) - 1)
            amul, aadd = f.alg_mul, f.alg_add
            for i, x in enumerate(A):
                for j, y in enumerate(B):
                    out[i + j] = aadd(out[i + j], amul(x, y))
            return _from_algs(f, out)
        out = [Scalar.zero(self.field)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return UniPoly.make(self.field, out)

    def scale(self, c: Scalar) -> "UniPoly":
        if c.is_zero():
            return UniPoly.zero(self.field)
        return UniPoly(self.field, tuple(a * c for a in self.coeffs))

    def shift_mul_x(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        z = Scalar.zero(self.field)
        return UniPoly(self.field, (z,) * k + self.coeffs)

    def __pow__(self, k: int) -> "UniPoly":
        out = UniPoly.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._chk(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Scalar.zero(self.field)] * max(0, len(rem) - len(other.coeffs) + 1)
        inv = other.lead.inv()
        nb = len(other.coeffs)
        while len(rem) >= nb:
            c = rem[-1] * inv
            k = len(rem) - nb
            q[k] = c
            for i, bc in enumerate(other.coeffs):
                rem[i + k] = rem[i + k] - c * bc
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) < nb:
                break
        return UniPoly.make(self.field, q), UniPoly.make(self.field, rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.lead.inv())

    def derivative(self) -> "UniPoly":
        f = self.field
        return UniPoly.make(f, [self.coeffs[i] * Scalar.from_rational(f, i)
                                for i in range(1, len(self.coeffs))])

    def eval(self, p: Scalar) -> Scalar:
        out = Scalar.zero(self.field)
        for c in reversed(self.coeffs):
            out = out * p + c
        return out

    def compose_linear(self, p: Scalar) -> "UniPoly":
        """Substitute x -> x + p."""
        xp = UniPoly.make(self.field, (p, Scalar.one(self.field)))
        out = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            out = out * xp + UniPoly.constant(c)
        return out

    # -- gcd and friends -------------------------------------------------------

    def valuation_at(self, p: Scalar) -> tuple[int, Scalar]:
        """Order of vanishing at x = p, and the first nonzero shifted coefficient.

        Returns (k, c) with self = c*(x-p)^k + higher order terms at p.
        """
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial")
        poly = self
        k = 0
        while True:
            v = poly.eval(p)
            if not v.is_zero():
                return k, v
            poly = poly._synth_div(p)
            k += 1

    def _synth_div(self, p: Scalar) -> "UniPoly":
        """Exact quotient by (x - p); requires eval(p) == 0."""
        n = len(self.coeffs) - 1
        out = [Scalar.zero(self.field)] * n
        carry = self.coeffs[n]
        out[n - 1] = carry
        for k in range(n - 1, 0, -1):
            carry = self.coeffs[k] + carry * p
            out[k - 1] = carry
        return UniPoly.make(self.field, out)


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor.

    Over parameter-free towers this is plain Euclid (scalars are single
    algebraic numbers).  With parameters, a primitive PRS on cleared
    coefficients avoids rational-function blowup in the remainders.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.field.nparams == 0:
        if p.field.generator is None:
            return _gcd_over_q(p, q)
        a, b = p, q
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()
    a, b = _cleared_primitive(p), _cleared_primitive(q)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem_x(a, b)
        a, b = b, (_cleared_primitive(r) if not r.is_zero() else r)
    return a.monic()


def _gcd_over_q(p: UniPoly, q: UniPoly) -> UniPoly:
    """Integer primitive PRS: avoids Fraction blowup in remainder chains."""
    f = p.field

    def to_ints(u: UniPoly) -> list[int]:
        vals = [c.num[0] for c in u.coeffs]
        den = math.lcm(*[v.denominator for v in vals])
        ints = [int(v * den) for v in vals]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        return [c // g for c in ints]

    a, b = to_ints(p), to_ints(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        # integer pseudo-remainder, re-primitivized each step
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
        g = 0
        for c in r:
            g = math.gcd(g, c)
        a, b = b, ([c // g for c in r] if g else r)
    inv = Fraction(1, a[-1])
    return UniPoly.make(f, [Scalar.from_rational(f, c * inv) for c in a])


def _cleared_primitive(p: UniPoly) -> UniPoly:
    """Scale so every coefficient is a primitive polynomial scalar."""
    from . import npoly

    f = p.field
    m = f.nparams
    den = npoly.one(f, m)
    for c in p.coeffs:
        den = npoly.lcm(f, m, den, c.den)
    nums = []
    for c in p.coeffs:
        factor = npoly.divexact(f, m, den, c.den)
        nums.append(npoly.mul(f, m, c.num, factor))
    cont = npoly.zero(f, m)
    for v in nums:
        cont = npoly.gcd(f, m, cont, v)
    one = npoly.one(f, m)
    if cont != one:
        nums = [npoly.divexact(f, m, v, cont) for v in nums]
    return UniPoly(f, tuple(Scalar(f, v, one) for v in nums))


def _pseudo_rem_x(a: UniPoly, b: UniPoly) -> UniPoly:
    lead = b.lead
    r = list(a.coeffs)
    nb = len(b.coeffs)
    while len(r) >= nb:
        lr = r[-1]
        k = len(r) - nb
        r = [c * lead for c in r]
        for i, bc in enumerate(b.coeffs):
            r[i + k] = r[i + k] - lr * bc
        while r and r[-1].is_zero():
            r.pop()
    return UniPoly.make(a.field, r)


def poly_lcm(p: UniPoly, q: UniPoly) -> UniPoly:
    if p.is_zero() or q.is_zero():
        raise DivisionByZero("lcm with the zero polynomial")
    g = poly_gcd(p, q)
    return (p.divmod(g)[0] * q).monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """The monic product of the distinct irreducible factors of p."""
    if p.is_zero():
        raise ValueError("squarefree part of zero")
    if p.degree == 0:
        return UniPoly.one(p.field)
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0].monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: [(q_i, i)] with p = lead * prod q_i^i, q_i squarefree."""
    if p.is_zero():
        raise ValueError("squarefree decomposition of zero")
    p = p.monic()
    out = []
    if p.degree <= 0:
        return out
    dp = p.derivative()
    g = poly_gcd(p, dp)
    c = p.divmod(g)[0]
    d = dp.divmod(g)[0] - c.derivative()
    i = 1
    while c.degree > 0:
        q = poly_gcd(c, d)
        if q.degree > 0:
            out.append((q, i))
        c_next = c.divmod(q)[0]
        d = d.divmod(q)[0] - c_next.derivative()
        c = c_next
        i += 1
    return out
