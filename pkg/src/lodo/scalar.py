"""Scalars: reduced fractions of parameter polynomials over Q(theta).

A Scalar is the constant-field element type of the whole package.  The
canonical form keeps the fraction reduced (polynomial gcd and content
removed) with the denominator's recursive leading coefficient equal to one,
so equality is plain coefficient-wise identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import npoly
from .errors import DivisionByZero, FieldMismatch
from .fields import FieldDescriptor


@dataclass(frozen=True)
class Scalar:
    field: FieldDescriptor
    num: tuple
    den: tuple

    # -- constructors ------------------------------------------------------

    @staticmethod
    def make(field: FieldDescriptor, num, den=None) -> "Scalar":
        """Build a canonical scalar from npoly numerator/denominator."""
        m = field.nparams
        one = npoly.one(field, m)
        if den is None or den == one:
            if npoly.is_zero(field, m, num):
                return Scalar(field, npoly.zero(field, m), one)
            return Scalar(field, num, one)
        if npoly.is_zero(field, m, den):
            raise DivisionByZero("scalar with zero denominator")
        if npoly.is_zero(field, m, num):
            return Scalar(field, npoly.zero(field, m), one)
        if m == 0:
            return Scalar(field, field.alg_div(num, den), field.alg_one())
        if _np_is_const(m, den):
            inv = field.alg_inv(npoly.leading_alg(den, m))
            return Scalar(field, npoly.mul_alg(field, m, num, inv), one)
        if not _np_is_const(m, num):
            g = npoly.gcd(field, m, num, den)
            if not _np_is_one(field, m, g):
                num = npoly.divexact(field, m, num, g)
                den = npoly.divexact(field, m, den, g)
                if den == one:
                    return Scalar(field, num, one)
        lc = npoly.leading_alg(den, m)
        if lc != field.alg_one():
            inv = field.alg_inv(lc)
            num = npoly.mul_alg(field, m, num, inv)
            den = npoly.mul_alg(field, m, den, inv)
        return Scalar(field, num, den)

    @staticmethod
    def from_rational(field: FieldDescriptor, q) -> "Scalar":
        return _cached_rational(field, Fraction(q))

    @staticmethod
    def from_alg(field: FieldDescriptor, a) -> "Scalar":
        m = field.nparams
        return Scalar.make(field, npoly.const(field, m, a))

    @staticmethod
    def zero(field: FieldDescriptor) -> "Scalar":
        m = field.nparams
        return Scalar(field, npoly.zero(field, m), npoly.one(field, m))

    @staticmethod
    def one(field: FieldDescriptor) -> "Scalar":
        m = field.nparams
        return Scalar(field, npoly.one(field, m), npoly.one(field, m))

    @staticmethod
    def gen(field: FieldDescriptor) -> "Scalar":
        return Scalar.from_alg(field, field.alg_gen())

    @staticmethod
    def param(field: FieldDescriptor, name: str) -> "Scalar":
        idx = field.params.index(name)  # lives at level idx+1, innermost first
        m = field.nparams
        v = (npoly.zero(field, idx), npoly.lift(npoly.one(field, 0), idx))
        v = npoly.lift(v, m - idx - 1)
        return Scalar(field, v, npoly.one(field, m))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return npoly.is_zero(self.field, self.field.nparams, self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return _np_is_one(self.field, self.field.nparams, self.num) and \
            _np_is_one(self.field, self.field.nparams, self.den)

    def is_param_free(self) -> bool:
        """True when the scalar lies in Q(theta)."""
        m = self.field.nparams
        return _np_is_const(m, self.num) and _np_is_const(m, self.den)

    def as_alg(self):
        """The underlying AlgNum; requires is_param_free()."""
        m = self.field.nparams
        num, den = self.num, self.den
        for _ in range(m):
            num = num[0] if num else self.field.alg_zero()
            den = den[0]
        return self.field.alg_div(num, den)

    def as_rational(self) -> Fraction:
        a = self.as_alg()
        if not self.field.alg_is_rational(a):
            raise ValueError("scalar is not rational")
        return a[0]

    def is_integer(self) -> bool:
        if not self.is_param_free():
            return False
        a = self.as_alg()
        return self.field.alg_is_rational(a) and a[0].denominator == 1

    # -- ring operations ----------------------------------------------------

    def _chk(self, other: "Scalar"):
        if self.field != other.field:
            raise FieldMismatch("scalars over different fields")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._chk(other)
        f, m = self.field, self.field.nparams
        one = npoly.one(f, m)
        if self.den == one and other.den == one:
            return Scalar(f, npoly.add(f, m, self.num, other.num), one)
        num = npoly.add(f, m, npoly.mul(f, m, self.num, other.den),
                        npoly.mul(f, m, other.num, self.den))
        return Scalar.make(f, num, npoly.mul(f, m, self.den, other.den))

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        f, m = self.field, self.field.nparams
        return Scalar(f, npoly.neg(f, m, self.num), self.den)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._chk(other)
        f, m = self.field, self.field.nparams
        one = npoly.one(f, m)
        if self.den == one and other.den == one:
            return Scalar(f, npoly.mul(f, m, self.num, other.num), one)
        return Scalar.make(f, npoly.mul(f, m, self.num, other.num),
                           npoly.mul(f, m, self.den, other.den))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._chk(other)
        if other.is_zero():
            raise DivisionByZero("scalar division by zero")
        f, m = self.field, self.field.nparams
        return Scalar.make(f, npoly.mul(f, m, self.num, other.den),
                           npoly.mul(f, m, self.den, other.num))

    def inv(self) -> "Scalar":
        return Scalar.one(self.field) / self

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inv() ** (-k)
        out = Scalar.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    # -- square root --------------------------------------------------------

    def sqrt(self) -> tuple["Scalar | None", bool]:
        """(root, decided): root of self in the tower, if one exists.

        decided=False means membership could not be settled (the root-finding
        completeness flag drops in that case).
        """
        f, m = self.field, self.field.nparams
        if self.is_zero():
            return Scalar.zero(f), True
        if m == 0:
            r, dec = f.alg_sqrt(self.num)
            return (Scalar(f, r, f.alg_one()) if r is not None else None), dec
        cn = npoly.leading_alg(self.num, m)
        wn = npoly.sqrt_monic(f, m, npoly.mul_alg(f, m, self.num, f.alg_inv(cn)))
        if wn is None:
            return None, True
        wd = npoly.sqrt_monic(f, m, self.den)
        if wd is None:
            return None, True
        rc, dec = f.alg_sqrt(cn)
        if rc is None:
            return None, dec
        root = Scalar.make(f, npoly.mul_alg(f, m, wn, rc), wd)
        return root, True

    # -- ordering key and rendering ------------------------------------------

    def sort_key(self):
        m = self.field.nparams
        return (tuple(npoly.monomials(self.num, m)), tuple(npoly.monomials(self.den, m)))

    def __str__(self) -> str:
        n, cls = self.render()
        return n

    def render(self) -> tuple[str, str]:
        """Grammar-compatible string plus a coarse syntax class.

        The class is one of 'atom' (single positive token), 'product'
        (monomial, possibly signed), 'sum', 'fraction'.
        """
        f, m = self.field, self.field.nparams
        num_s, num_cls = _np_render(f, self.num)
        if _np_is_one(f, m, self.den):
            return num_s, num_cls
        den_s, den_cls = _np_render(f, self.den)
        num_w = f"({num_s})" if num_cls == "sum" else num_s
        den_w = f"({den_s})" if den_cls in ("sum", "product") else den_s
        return f"{num_w}/{den_w}", "fraction"

    def sign_split(self) -> tuple[int, "Scalar"]:
        """(sign, magnitude) where sign follows the leading coefficient."""
        m = self.field.nparams
        lc = npoly.leading_alg(self.num, m)
        if lc is None:
            return 0, self
        lead_fr = next((c for c in reversed(lc) if c != 0), Fraction(0))
        if lead_fr < 0:
            return -1, -self
        return 1, self


def _cached_rational(field: FieldDescriptor, q: Fraction) -> Scalar:
    # rational constants recur endlessly (derivatives, falling factorials);
    # identity-keyed per-field cache avoids rebuilding them
    cache = field.__dict__.get("_rat_cache")
    if cache is None:
        cache = {}
        object.__setattr__(field, "_rat_cache", cache)
    hit = cache.get(q)
    if hit is None:
        m = field.nparams
        hit = Scalar(field, npoly.const(field, m, field.alg_from_rational(q)),
                     npoly.one(field, m))
        if len(cache) < 4096:
            cache[q] = hit
    return hit


def _np_is_one(field, level, v) -> bool:
    return v == npoly.one(field, level)


def _np_is_const(level, v) -> bool:
    for _ in range(level):
        if v == ():
            return True
        if len(v) > 1:
            return False
        v = v[0]
    return True


def _np_render(field: FieldDescriptor, v) -> tuple[str, str]:
    """Render an npoly value; returns (text, class)."""
    m = field.nparams
    items = sorted(npoly.monomials(v, m), key=lambda t: t[0], reverse=True)
    if not items:
        return "0", "atom"
    terms = []
    naked_alg_sum = False
    for exps, a in items:
        # variable exponents: outermost first == params reversed
        mons = []
        for lvl_from_outer, e in enumerate(exps):
            if e == 0:
                continue
            name = field.params[m - 1 - lvl_from_outer]
            mons.append(name if e == 1 else f"{name}^{e}")
        coeff_terms = field.alg_term_count(a)
        coeff_s = field.alg_str(a)
        neg = coeff_s.startswith("-")
        if neg:
            coeff_s = coeff_s[1:]
        if mons and coeff_terms > 1:
            body = "(" + field.alg_str(a if not neg else field.alg_neg(a)) + ")" + "*" + "*".join(mons)
            neg_out = neg
        elif mons:
            if coeff_s == "1":
                body = "*".join(mons)
            else:
                body = coeff_s + "*" + "*".join(mons)
            neg_out = neg
        else:
            body = coeff_s
            neg_out = neg
            if coeff_terms > 1:
                naked_alg_sum = True
        terms.append(("-" if neg_out else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    if len(terms) > 1 or naked_alg_sum:
        cls = "sum"
    else:
        single = terms[0][1]
        if terms[0][0] == "-":
            cls = "sum"  # a leading unary minus needs wrapping as a factor
        elif "*" in single or "(" in single:
            cls = "product"
        else:
            cls = "atom"  # name, power, or a one-token rational literal
    return out, cls
