"""The noncommutative operator ring K(x)[D] with D*x = x*D + 1.

Operators are stored with rational-function coefficients ascending in D; the
zero operator has order -1.  Composition expands through the Leibniz rule,
and right Euclidean division gives remainders, quotients and GCRDs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZeroOperator, FieldMismatch, ZeroOperator
from .fields import FieldDescriptor
from .ratfun import RatFun
from .scalar import Scalar
from .unipoly import UniPoly


@dataclass(frozen=True)
class DiffOp:
    field: FieldDescriptor
    coeffs: tuple  # tuple[RatFun, ...], ascending in D, no trailing zeros

    # -- constructors -------------------------------------------------------

    @staticmethod
    def make(field: FieldDescriptor, coeffs) -> "DiffOp":
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return DiffOp(field, tuple(cs))

    @staticmethod
    def zero(field: FieldDescriptor) -> "DiffOp":
        return DiffOp(field, ())

    @staticmethod
    def one(field: FieldDescriptor) -> "DiffOp":
        return DiffOp(field, (RatFun.one(field),))

    @staticmethod
    def delta(field: FieldDescriptor) -> "DiffOp":
        return DiffOp(field, (RatFun.zero(field), RatFun.one(field)))

    @staticmethod
    def from_ratfun(f: RatFun) -> "DiffOp":
        return DiffOp.make(f.field, (f,))

    @staticmethod
    def first_order(a: RatFun) -> "DiffOp":
        """The operator D - a."""
        return DiffOp(a.field, (-a, RatFun.one(a.field)))

    # -- structure ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> RatFun:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatFun.zero(self.field)

    @property
    def lead(self) -> RatFun:
        if not self.coeffs:
            raise ZeroOperator("zero operator has no leading coefficient")
        return self.coeffs[-1]

    def _chk(self, other: "DiffOp"):
        if self.field != other.field:
            raise FieldMismatch("operators over different fields")

    # -- additive structure -----------------------------------------------------

    def __add__(self, other: "DiffOp") -> "DiffOp":
        self._chk(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp.make(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def __neg__(self) -> "DiffOp":
        return DiffOp(self.field, tuple(-c for c in self.coeffs))

    def scale(self, f: RatFun) -> "DiffOp":
        """Left multiplication by a function: coefficients scale directly."""
        if f.is_zero():
            return DiffOp.zero(self.field)
        return DiffOp(self.field, tuple(c * f for c in self.coeffs))

    # -- multiplicative structure --------------------------------------------------

    def __mul__(self, other: "DiffOp") -> "DiffOp":
        """Ore product: D^k pushes through f by the Leibniz expansion."""
        self._chk(other)
        if self.is_zero() or other.is_zero():
            return DiffOp.zero(self.field)
        out = DiffOp.zero(self.field)
        shifted = other  # D^i * other, starting at i = 0
        for i, b in enumerate(self.coeffs):
            if i > 0:
                shifted = _delta_compose(shifted)
            if not b.is_zero():
                out = out + shifted.scale(b)
        return out

    def __pow__(self, k: int) -> "DiffOp":
        out = DiffOp.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    def apply(self, f: RatFun) -> RatFun:
        """The action sum(b_i * f^(i))."""
        out = RatFun.zero(self.field)
        der = f
        for i, b in enumerate(self.coeffs):
            if i > 0:
                der = der.derivative()
            if not b.is_zero():
                out = out + b * der
        return out

    # -- right division ---------------------------------------------------------

    def rdivide(self, p: "DiffOp") -> tuple["DiffOp", "DiffOp"]:
        """(quo, rem) with self = quo * p + rem and ord(rem) < ord(p)."""
        self._chk(p)
        if p.is_zero():
            raise DivisionByZeroOperator("right division by the zero operator")
        f = self.field
        if self.is_zero() or self.order < p.order:
            return DiffOp.zero(f), self
        shifts = [p]  # D^k * p, computed once
        for _ in range(self.order - p.order):
            shifts.append(_delta_compose(shifts[-1]))
        quo = [RatFun.zero(f)] * (self.order - p.order + 1)
        rem = self
        while not rem.is_zero() and rem.order >= p.order:
            k = rem.order - p.order
            c = rem.lead / p.lead
            quo[k] = quo[k] + c
            rem = rem - shifts[k].scale(c)
        return DiffOp.make(f, quo), rem

    def rem(self, p: "DiffOp") -> "DiffOp":
        return self.rdivide(p)[1]

    def right_divides(self, other: "DiffOp") -> bool:
        return other.rdivide(self)[1].is_zero()

    def monic(self) -> "DiffOp":
        if self.is_zero():
            raise ZeroOperator("monic of the zero operator")
        return self.scale(self.lead.inv())

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead.is_one()


def _delta_compose(op: DiffOp) -> DiffOp:
    """D * op, one Leibniz step: coefficients differentiate and shift."""
    f = op.field
    n = len(op.coeffs)
    out = [RatFun.zero(f)] * (n + 1)
    for i, c in enumerate(op.coeffs):
        out[i] = out[i] + c.derivative()
        out[i + 1] = out[i + 1] + c
    return DiffOp.make(f, out)


def gcrd(a: DiffOp, b: DiffOp) -> DiffOp:
    """Monic greatest common right divisor by the right Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ZeroOperator("gcrd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a.rem(b)
    return a.monic()


def op_from_ints(field: FieldDescriptor, rows) -> DiffOp:
    """Convenience: build sum of c*x^j*D^i from integer triples (i, j, c)."""
    coeffs: dict[int, UniPoly] = {}
    maxi = max((i for i, _, _ in rows), default=-1)
    for i, j, c in rows:
        p = coeffs.get(i, UniPoly.zero(field))
        coeffs[i] = p + UniPoly.from_ints(field, [0] * j + [c])
    return DiffOp.make(field, [RatFun.from_poly(coeffs.get(i, UniPoly.zero(field)))
                               for i in range(maxi + 1)])
