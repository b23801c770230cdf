"""Recursive dense polynomials in the parameter variables.

A value at level 0 is an algebraic number (coefficient tuple over Q(theta));
a value at level k >= 1 is a tuple of level-(k-1) values, ascending in the
k-th parameter, with no trailing zeros.  The zero polynomial at level >= 1 is
the empty tuple.  Parameters commute with the derivation, so no derivative is
defined here.
"""

from __future__ import annotations

from .errors import DivisionByZero
from .fields import FieldDescriptor


def zero(field: FieldDescriptor, level: int):
    return field.alg_zero() if level == 0 else ()


def one(field: FieldDescriptor, level: int):
    cache = field.__dict__.get("_np_one")
    if cache is None:
        cache = {}
        object.__setattr__(field, "_np_one", cache)
    v = cache.get(level)
    if v is None:
        v = field.alg_one()
        for _ in range(level):
            v = (v,)
        cache[level] = v
    return v


def const(field: FieldDescriptor, level: int, a):
    """Embed an algebraic number as a level-`level` polynomial."""
    if level == 0:
        return a
    if field.alg_is_zero(a):
        return ()
    v = a
    for _ in range(level):
        v = (v,)
    return v


def lift(v, extra: int):
    """Wrap a polynomial into `extra` additional outer levels (new variables)."""
    for _ in range(extra):
        v = (v,) if not is_zero_shallow(v) else ()
    return v


def is_zero_shallow(v) -> bool:
    # valid for canonical values at any level: () at levels >= 1,
    # all-zero tuple of Fractions at level 0
    if v == ():
        return True
    if isinstance(v[0], tuple):
        return False
    return all(c == 0 for c in v)


def is_zero(field: FieldDescriptor, level: int, v) -> bool:
    if level == 0:
        return field.alg_is_zero(v)
    return v == ()


def degree(v, level: int) -> int:
    """Degree in the outermost variable; -1 for the zero polynomial."""
    if level == 0:
        raise ValueError("degree undefined at level 0")
    return len(v) - 1


def _trim(entries: list, field: FieldDescriptor, level: int) -> tuple:
    while entries and is_zero(field, level - 1, entries[-1]):
        entries.pop()
    return tuple(entries)


def add(field: FieldDescriptor, level: int, a, b):
    if level == 0:
        return field.alg_add(a, b)
    out = []
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else zero(field, level - 1)
        y = b[i] if i < len(b) else zero(field, level - 1)
        out.append(add(field, level - 1, x, y))
    return _trim(out, field, level)


def neg(field: FieldDescriptor, level: int, a):
    if level == 0:
        return field.alg_neg(a)
    return tuple(neg(field, level - 1, c) for c in a)


def sub(field: FieldDescriptor, level: int, a, b):
    return add(field, level, a, neg(field, level, b))


def mul(field: FieldDescriptor, level: int, a, b):
    if level == 0:
        return field.alg_mul(a, b)
    if not a or not b:
        return ()
    out = [zero(field, level - 1)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if is_zero(field, level - 1, x):
            continue
        for j, y in enumerate(b):
            if is_zero(field, level - 1, y):
                continue
            out[i + j] = add(field, level - 1, out[i + j], mul(field, level - 1, x, y))
    return _trim(out, field, level)


def mul_alg(field: FieldDescriptor, level: int, a, c):
    """Multiply by an algebraic-number constant."""
    if level == 0:
        return field.alg_mul(a, c)
    if field.alg_is_zero(c):
        return ()
    return tuple(mul_alg(field, level - 1, e, c) for e in a)


def pow_(field: FieldDescriptor, level: int, a, k: int):
    out = one(field, level)
    for _ in range(k):
        out = mul(field, level, out, a)
    return out


def leading_alg(v, level: int):
    """The recursive leading coefficient (an algebraic number); None for zero."""
    for _ in range(level):
        if v == ():
            return None
        v = v[-1]
    return v


def monic(field: FieldDescriptor, level: int, v):
    lc = leading_alg(v, level)
    if lc is None:
        return v
    return mul_alg(field, level, v, field.alg_inv(lc))


def divexact(field: FieldDescriptor, level: int, a, b):
    """Exact division a / b; returns None when b does not divide a."""
    if is_zero(field, level, b):
        raise DivisionByZero("exact division by zero polynomial")
    if level == 0:
        return field.alg_div(a, b)
    if not a:
        return ()
    if len(a) < len(b):
        return None
    rem = list(a)
    q = [zero(field, level - 1)] * (len(a) - len(b) + 1)
    blead = b[-1]
    while rem and len(rem) >= len(b):
        c = divexact(field, level - 1, rem[-1], blead)
        if c is None:
            return None
        k = len(rem) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            rem[i + k] = sub(field, level - 1, rem[i + k], mul(field, level - 1, c, bc))
        while rem and is_zero(field, level - 1, rem[-1]):
            rem.pop()
    if rem:
        return None
    return _trim(q, field, level)


def _pseudo_rem(field: FieldDescriptor, level: int, a, b):
    """prem(a, b) in the outermost variable (coefficients stay polynomial)."""
    lead_b = b[-1]
    r = list(a)
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        lead_r = r[-1]
        r = [mul(field, level - 1, c, lead_b) for c in r]
        for i, bc in enumerate(b):
            r[i + k] = sub(field, level - 1, r[i + k], mul(field, level - 1, lead_r, bc))
        while r and is_zero(field, level - 1, r[-1]):
            r.pop()
    return tuple(r)


def content(field: FieldDescriptor, level: int, a):
    """gcd of the coefficients, as a level-(level-1) polynomial."""
    c = zero(field, level - 1)
    for e in a:
        c = gcd(field, level - 1, c, e)
    return c


def primitive_part(field: FieldDescriptor, level: int, a):
    if not a:
        return a
    c = content(field, level, a)
    if level - 1 == 0:
        # coefficients are field elements: content is a unit
        return monic(field, level, a)
    return tuple(divexact(field, level - 1, e, c) for e in a)


def gcd(field: FieldDescriptor, level: int, a, b):
    """Monic gcd via content/primitive-part recursion with a primitive PRS."""
    if level == 0:
        if field.alg_is_zero(a) and field.alg_is_zero(b):
            return field.alg_zero()
        return field.alg_one()
    if not a:
        return monic(field, level, b)
    if not b:
        return monic(field, level, a)
    if level == 1:
        # univariate over the field: plain Euclid
        while b:
            b, a = _euclid_rem(field, a, b), b
        # note: loop keeps gcd in `a` after swap; normalize below
        return monic(field, 1, a)
    ca, cb = content(field, level, a), content(field, level, b)
    pa = tuple(divexact(field, level - 1, e, ca) for e in a)
    pb = tuple(divexact(field, level - 1, e, cb) for e in b)
    cc = gcd(field, level - 1, ca, cb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = _pseudo_rem(field, level, pa, pb)
        r = primitive_part(field, level, r)
        pa, pb = pb, r
    g = tuple(mul(field, level - 1, e, cc) for e in primitive_part(field, level, pa))
    return monic(field, level, g)


def _euclid_rem(field: FieldDescriptor, a, b):
    """Remainder of a by b, univariate with field coefficients (level 1)."""
    r = list(a)
    inv = field.alg_inv(b[-1])
    while r and len(r) >= len(b):
        c = field.alg_mul(r[-1], inv)
        k = len(r) - len(b)
        for i, bc in enumerate(b):
            r[i + k] = field.alg_sub(r[i + k], field.alg_mul(c, bc))
        while r and field.alg_is_zero(r[-1]):
            r.pop()
    return tuple(r)


def lcm(field: FieldDescriptor, level: int, a, b):
    if is_zero(field, level, a) or is_zero(field, level, b):
        raise DivisionByZero("lcm with zero polynomial")
    g = gcd(field, level, a, b)
    q = divexact(field, level, a, g)
    return monic(field, level, mul(field, level, q, b))


def sqrt_monic(field: FieldDescriptor, level: int, a):
    """Exact square root of a perfect square whose recursive lead is 1.

    Returns None when a is not a perfect square.
    """
    if level == 0:
        r, decided = field.alg_sqrt(a)
        if not decided:  # cannot happen for monic-normalized input
            return None
        return r
    if not a:
        return ()
    if (len(a) - 1) % 2 != 0:
        return None
    e = (len(a) - 1) // 2
    w = [zero(field, level - 1)] * (e + 1)
    we = sqrt_monic(field, level - 1, a[-1])
    if we is None:
        return None
    w[e] = we
    two_we = add(field, level - 1, we, we)
    for i in range(e - 1, -1, -1):
        acc = a[e + i] if e + i < len(a) else zero(field, level - 1)
        for j in range(i + 1, e):
            k = e + i - j
            if i < k <= e:
                acc = sub(field, level - 1, acc, mul(field, level - 1, w[j], w[k]))
        wi = divexact(field, level - 1, acc, two_we)
        if wi is None:
            return None
        w[i] = wi
    cand = _trim(w, field, level)
    if mul(field, level, cand, cand) != a:
        return None
    return cand


def eval_params(field: FieldDescriptor, level: int, n_eval: int, values: list, v):
    """Evaluate the ``n_eval`` innermost variables at algebraic numbers.

    ``values[i]`` is the AlgNum for the variable at level i+1 (innermost
    first).  The outermost ``level - n_eval`` variables survive; the result
    is a polynomial at level ``level - n_eval`` (an AlgNum when that is 0).
    """
    if level == 0:
        return v
    entries = [eval_params(field, level - 1, n_eval, values, c) for c in v]
    if level <= n_eval:
        # entries are AlgNums: Horner at this variable's value
        val = values[level - 1]
        out = field.alg_zero()
        for c in reversed(entries):
            out = field.alg_add(field.alg_mul(out, val), c)
        return out
    return _trim(entries, field, level - n_eval)


def monomials(v, level: int):
    """Yield (exponent tuple, AlgNum) pairs for nonzero coefficients only."""
    if level == 0:
        if any(c != 0 for c in v):
            yield (), v
        return
    for i, c in enumerate(v):
        for exps, a in monomials(c, level - 1):
            yield (i,) + exps, a


def from_monomials(field: FieldDescriptor, level: int, items):
    """Inverse of `monomials`: build a polynomial from (exponents, AlgNum)."""
    out = zero(field, level)
    for exps, a in items:
        term = a
        for lvl, e in enumerate(reversed(exps), start=1):
            term = tuple([zero(field, lvl - 1)] * e + [term])
        out = add(field, level, out, term)
    return out
