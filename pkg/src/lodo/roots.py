"""Root finding over the field tower, with completeness certification.

The dispatch covers what exact arithmetic can settle without a factorization
engine: linear and quadratic factors over the whole tower (via square testing
in Q(theta) and in the parameter field), rational-root search for
rational-coefficient polynomials, plus degree arguments that prove absence.
Integer roots (needed for polynomial-solution degree bounds) are always
complete via coefficient projection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import npoly
from .errors import UnsupportedDegree
from .scalar import Scalar
from .unipoly import UniPoly, squarefree_decomposition


@dataclass(frozen=True)
class RootReport:
    roots: tuple  # tuple[(Scalar, int multiplicity), ...]
    complete: bool


def roots_in_field(p: UniPoly, require_complete: bool = False) -> RootReport:
    """All roots of p lying in the field tower, with multiplicities.

    complete=True means p splits into linear factors over the tower, i.e. the
    returned list accounts for every root over the algebraic closure.  A
    factor that provably has no tower roots still drops the flag: its closure
    roots exist and are not listed.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    roots: list[tuple[Scalar, int]] = []
    for q, e in squarefree_decomposition(p):
        roots.extend((r, e) for r in _squarefree_roots(q))
    complete = sum(m for _, m in roots) == p.degree
    if require_complete and not complete:
        raise UnsupportedDegree("polynomial does not split over the declared tower")
    roots.sort(key=lambda t: t[0].sort_key())
    return RootReport(tuple(roots), complete)


def _squarefree_roots(q: UniPoly) -> list[Scalar]:
    field = q.field
    roots: list[Scalar] = []
    if q.degree <= 0:
        return roots
    rational = _as_rational_coeffs(q)
    if rational is not None:
        for fr in _rational_poly_roots(rational):
            r = Scalar.from_rational(field, fr)
            roots.append(r)
            q = q._synth_div(r)
    if q.degree in (1, 2):
        roots.extend(_low_degree_roots(q))
    return roots


def _low_degree_roots(q: UniPoly) -> list[Scalar]:
    field = q.field
    if q.degree == 1:
        return [-q.coeff(0) / q.coeff(1)]
    a, b, c = q.coeff(2), q.coeff(1), q.coeff(0)
    four = Scalar.from_rational(field, 4)
    two = Scalar.from_rational(field, 2)
    disc = b * b - four * a * c
    root, _decided = disc.sqrt()
    if root is None:
        return []
    r1 = (-b + root) / (two * a)
    if root.is_zero():
        # squarefree input never reaches a double root, but stay safe
        return [r1]
    return [r1, (-b - root) / (two * a)]


def _as_rational_coeffs(q: UniPoly) -> list[Fraction] | None:
    out = []
    for c in q.coeffs:
        if not c.is_param_free():
            return None
        a = c.as_alg()
        if not q.field.alg_is_rational(a):
            return None
        out.append(a[0])
    return out


def _rational_poly_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of a rational-coefficient polynomial (with repeats
    removed; caller works with squarefree input)."""
    den = math.lcm(*[c.denominator for c in coeffs])
    ints = [int(c * den) for c in coeffs]
    roots = []
    while ints and ints[0] == 0:
        roots.append(Fraction(0))
        ints = ints[1:]
        break  # squarefree: at most one zero root
    if len(ints) <= 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    seen = set()
    for pnum in _divisors(a0):
        for qden in _divisors(an):
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                if cand in seen:
                    continue
                seen.add(cand)
                if _eval_int_poly(ints, cand) == 0:
                    roots.append(cand)
    return roots


def _eval_int_poly(ints: list[int], v: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(ints):
        out = out * v + c
    return out


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


def integer_roots(p: UniPoly) -> list[int]:
    """All integer roots of p, exactly, for any tower coefficients.

    An integer root must kill every Q-coordinate of every parameter monomial
    simultaneously, so candidates come from any single nonzero rational
    projection of the coefficient vector and are then verified exactly.
    """
    if p.is_zero():
        raise ValueError("integer roots of the zero polynomial")
    proj = _rational_projection(p)
    den = math.lcm(*[c.denominator for c in proj])
    ints = [int(c * den) for c in proj]
    candidates = set()
    while ints and ints[0] == 0:
        candidates.add(0)
        ints = ints[1:]
    if len(ints) > 1:
        for d in _divisors(abs(ints[0])):
            for cand in (d, -d):
                if _eval_int_poly(ints, Fraction(cand)) == 0:
                    candidates.add(cand)
    out = []
    for cand in sorted(candidates):
        v = Scalar.from_rational(p.field, cand)
        if p.eval(v).is_zero():
            out.append(cand)
    return out


def _rational_projection(p: UniPoly) -> list[Fraction]:
    """A nonzero Q-linear image of the coefficient list (same degree span)."""
    field = p.field
    m = field.nparams
    # choose the first position (monomial exponents, basis index) at which
    # any coefficient numerator is nonzero, after clearing denominators
    cleared = []
    denlcm = npoly.one(field, m)
    for c in p.coeffs:
        denlcm = npoly.lcm(field, m, denlcm, c.den)
    for c in p.coeffs:
        mulf = npoly.divexact(field, m, denlcm, c.den)
        cleared.append(npoly.mul(field, m, c.num, mulf))
    positions = set()
    for v in cleared:
        for exps, a in npoly.monomials(v, m):
            for idx, fr in enumerate(a):
                if fr != 0:
                    positions.add((exps, idx))
    pos = sorted(positions)[0]
    out = []
    for v in cleared:
        val = Fraction(0)
        for exps, a in npoly.monomials(v, m):
            if exps == pos[0] and a[pos[1]] != 0:
                val = a[pos[1]]
        out.append(val)
    return out
