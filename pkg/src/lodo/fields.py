"""Field descriptors and exact arithmetic in Q(theta).

A field tower is described by an optional algebraic generator theta with a
monic minimal polynomial over Q, plus an ordered list of transcendental
parameter names.  Elements of Q(theta) ("algebraic numbers" below) are stored
as coefficient tuples of length deg(m) on the power basis 1, theta, ...,
theta^(d-1); the degenerate tower without a generator uses tuples of length 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero

AlgNum = tuple  # tuple[Fraction, ...], length = FieldDescriptor.ext_degree

_RESERVED = ("x", "D")


def _qpoly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    # plain long division in Q[y]
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and _qpoly_trim(a):
        k = len(a) - len(b)
        f = a[-1] * inv
        q[k] = f
        for i, bc in enumerate(b):
            a[i + k] -= f * bc
        _qpoly_trim(a)
    return _qpoly_trim(q), a


def _qpoly_gcd(a: list, b: list) -> list:
    a, b = _qpoly_trim(list(a)), _qpoly_trim(list(b))
    while b:
        a, b = b, _qpoly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _qpoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qpoly_trim(out)


def _qpoly_sub(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _qpoly_trim(out)


@dataclass(frozen=True)
class FieldDescriptor:
    """Shape of the coefficient field Q(theta)(t1, ..., tm).

    ``generator`` is the name of theta (None for plain Q); ``min_poly`` its
    monic minimal polynomial as ascending rational coefficients.  Minimal
    polynomials are proxy-checked only (squarefree, and no rational root for
    degree <= 3); genuine irreducibility is owned by the caller.
    """

    generator: str | None = None
    min_poly: tuple = ()  # tuple[Fraction, ...], ascending, monic; () iff no generator
    params: tuple = ()  # tuple[str, ...]

    def __post_init__(self):
        mp = tuple(Fraction(c) for c in self.min_poly)
        object.__setattr__(self, "min_poly", mp)
        object.__setattr__(self, "params", tuple(self.params))
        if (self.generator is None) != (len(mp) == 0):
            raise ValueError("generator and min_poly must be given together")
        names = list(self.params)
        if self.generator is not None:
            if len(mp) < 3:
                raise ValueError("minimal polynomial must have degree >= 2")
            if mp[-1] != 1:
                raise ValueError("minimal polynomial must be monic")
            d = len(mp) - 1
            der = [i * mp[i] for i in range(1, d + 1)]
            if len(_qpoly_gcd(list(mp), der)) != 1:
                raise ValueError("minimal polynomial must be squarefree")
            if d <= 3 and _has_rational_root(mp):
                raise ValueError("minimal polynomial of degree <= 3 must have no rational root")
            names.append(self.generator)
        for n in names:
            if n in _RESERVED:
                raise ValueError(f"name {n!r} is reserved")
        if len(set(names)) != len(names):
            raise ValueError("generator and parameter names must be distinct")

    @property
    def ext_degree(self) -> int:
        return len(self.min_poly) - 1 if self.min_poly else 1

    @property
    def nparams(self) -> int:
        return len(self.params)

    def with_params(self, params) -> "FieldDescriptor":
        return FieldDescriptor(self.generator, self.min_poly, tuple(params))

    def drop_params(self) -> "FieldDescriptor":
        return FieldDescriptor(self.generator, self.min_poly, ())

    # -- algebraic number arithmetic on coefficient tuples ----------------

    def alg_zero(self) -> AlgNum:
        z = self.__dict__.get("_alg_zero")
        if z is None:
            z = (Fraction(0),) * self.ext_degree
            object.__setattr__(self, "_alg_zero", z)
        return z

    def alg_one(self) -> AlgNum:
        o = self.__dict__.get("_alg_one")
        if o is None:
            o = self.alg_from_rational(Fraction(1))
            object.__setattr__(self, "_alg_one", o)
        return o

    def alg_from_rational(self, q) -> AlgNum:
        v = [Fraction(0)] * self.ext_degree
        v[0] = Fraction(q)
        return tuple(v)

    def alg_gen(self) -> AlgNum:
        if self.generator is None:
            raise ValueError("field has no algebraic generator")
        v = [Fraction(0)] * self.ext_degree
        v[1] = Fraction(1)
        return tuple(v)

    def alg_is_zero(self, a: AlgNum) -> bool:
        return all(c.numerator == 0 for c in a)

    def alg_is_rational(self, a: AlgNum) -> bool:
        return all(c.numerator == 0 for c in a[1:])

    def alg_add(self, a: AlgNum, b: AlgNum) -> AlgNum:
        return tuple(x + y for x, y in zip(a, b))

    def alg_sub(self, a: AlgNum, b: AlgNum) -> AlgNum:
        return tuple(x - y for x, y in zip(a, b))

    def alg_neg(self, a: AlgNum) -> AlgNum:
        return tuple(-x for x in a)

    def alg_mul(self, a: AlgNum, b: AlgNum) -> AlgNum:
        d = self.ext_degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x.numerator:
                for j, y in enumerate(b):
                    if y.numerator:
                        prod[i + j] += x * y
        red = _reduction_rows(self)
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c.numerator:
                row = red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    def alg_inv(self, a: AlgNum) -> AlgNum:
        if self.alg_is_zero(a):
            raise DivisionByZero("inverse of zero")
        d = self.ext_degree
        if d == 1:
            return (1 / a[0],)
        # extended Euclid in Q[y] against the minimal polynomial
        m = list(self.min_poly)
        r0, r1 = m, _qpoly_trim(list(a))
        s0, s1 = [], [Fraction(1)]  # invariant: s_i * a = r_i  (mod m)
        while r1:
            q, r = _qpoly_divmod(r0, r1)
            s = _qpoly_sub(s0, _qpoly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        if len(r0) != 1:
            # squarefree but reducible minimal polynomial: a is a zero divisor
            raise DivisionByZero("element is not invertible (reducible minimal polynomial)")
        c = 1 / r0[0]
        inv = [x * c for x in s0]
        inv += [Fraction(0)] * (d - len(inv))
        return tuple(inv[:d])

    def alg_div(self, a: AlgNum, b: AlgNum) -> AlgNum:
        return self.alg_mul(a, self.alg_inv(b))

    def alg_pow(self, a: AlgNum, k: int) -> AlgNum:
        out = self.alg_one()
        for _ in range(k):
            out = self.alg_mul(out, a)
        return out

    def alg_sqrt(self, a: AlgNum) -> tuple[AlgNum | None, bool]:
        """Square root of a in Q(theta), with a decidability flag.

        Returns (root, True) or (None, True) when membership is decided, and
        (None, False) when the dispatch cannot settle it (extension degree
        >= 3 with a non-rational candidate, or even degree >= 4 with a
        rational non-square).
        """
        if self.alg_is_zero(a):
            return self.alg_zero(), True
        d = self.ext_degree
        if self.alg_is_rational(a):
            r = _rational_sqrt(a[0])
            if r is not None:
                return self.alg_from_rational(r), True
            if d == 1 or d % 2 == 1:
                # odd-degree extensions contain no new quadratic elements
                return None, True
            if d >= 4:
                return None, False
        if d == 1:
            return None, True
        if d == 2:
            return self._alg_sqrt_quadratic(a), True
        return None, False

    def _alg_sqrt_quadratic(self, a: AlgNum) -> AlgNum | None:
        # z = u + v*theta with theta^2 = -p*theta - q; solve z^2 = a over Q.
        q, p = self.min_poly[0], self.min_poly[1]
        s0, s1 = a
        if s1 == 0:
            r = _rational_sqrt(s0)
            if r is not None:
                return self.alg_from_rational(r)
        # v != 0 branch: w = v^2 solves (p^2-4q) w^2 + (2 s1 p - 4 s0) w + s1^2 = 0
        A = p * p - 4 * q
        B = 2 * s1 * p - 4 * s0
        C = s1 * s1
        for w in _rational_quadratic_roots(A, B, C):
            if w <= 0:
                continue
            v = _rational_sqrt(w)
            if v is None:
                continue
            for vv in (v, -v):
                u = s1 / (2 * vv) + p * vv / 2
                z = (u, vv)
                if self.alg_mul(z, z) == a:
                    return z
        return None

    # -- rendering ---------------------------------------------------------

    def alg_str(self, a: AlgNum) -> str:
        """Grammar-compatible rendering, e.g. '2*i + 1' or '-1/2'."""
        terms = []
        for k in range(self.ext_degree - 1, -1, -1):
            c = a[k]
            if c == 0:
                continue
            mon = self.generator if k == 1 else (f"{self.generator}^{k}" if k > 1 else "")
            mag = abs(c)
            if mon and mag == 1:
                body = mon
            elif mon:
                body = f"{mag}*{mon}"
            else:
                body = str(mag)
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def alg_term_count(self, a: AlgNum) -> int:
        return sum(1 for c in a if c != 0)


def _has_rational_root(mp: tuple) -> bool:
    # candidates p/q with p | constant, q | leading, after integer clearing
    den = math.lcm(*[c.denominator for c in mp])
    ints = [int(c * den) for c in mp]
    if ints[0] == 0:
        return True  # root 0
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand**i for i, c in enumerate(ints)) == 0:
                    return True
    return False


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _rational_quadratic_roots(a: Fraction, b: Fraction, c: Fraction) -> list:
    """Rational roots of a*w^2 + b*w + c."""
    if a == 0:
        if b == 0:
            return []
        return [-c / b]
    disc = b * b - 4 * a * c
    r = _rational_sqrt(disc)
    if r is None:
        return []
    roots = [(-b + r) / (2 * a)]
    if r != 0:
        roots.append((-b - r) / (2 * a))
    return roots


def _reduction_rows(field: FieldDescriptor) -> tuple:
    """Coefficient rows of theta^d ... theta^(2d-2) reduced mod min_poly.

    Stored lazily on the descriptor: hashing the descriptor per multiply
    would dominate the multiplication itself.
    """
    rows = field.__dict__.get("_red_rows")
    if rows is not None:
        return rows
    d = field.ext_degree
    m = field.min_poly
    out = []
    cur = [-m[i] for i in range(d)]  # theta^d
    out.append(tuple(cur))
    for _ in range(d - 2):
        nxt = [Fraction(0)] + cur[: d - 1]
        top = cur[d - 1]
        if top:
            for i in range(d):
                nxt[i] -= top * m[i]
        cur = nxt
        out.append(tuple(cur))
    rows = tuple(out)
    object.__setattr__(field, "_red_rows", rows)
    return rows
