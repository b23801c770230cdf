"""Degree invariants: d(L), exponential bounds, and the factor-degree bound.

The per-wedge quantity combines the transformation-matrix degree of each
exterior reduction with an exponential bound for its scalar operator; n^3
times the max bounds the degree of every proper irreducible right factor.
Exponential bounds come in two modes: `empirical` (max certificate degree of
a complete search) and `sound` (a structural upper bound on anything the
search engine can emit).  Both are policy-relative and say so.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import IncompleteSearch, NotADivisor, ZeroOperator
from .exterior import CYCLIC_POLICY, exterior_reduction, matrix_degree
from .ore import DiffOp
from .ratfun import RatFun
from .riccati import (cleared_coeffs, expsols, indicial_at, indicial_at_infinity,
                      poly_part_candidates, twist)
from .roots import integer_roots, roots_in_field
from .scalar import Scalar
from .unipoly import UniPoly, squarefree_part


@dataclass(frozen=True)
class WedgeTerm:
    s: int
    binom: int
    transform_degree: int
    exp_bound: int
    value: int


@dataclass(frozen=True)
class BoundReport:
    terms: tuple  # tuple[WedgeTerm, ...]
    b_value: int
    factor_bound: int
    mode: str  # 'empirical' | 'sound'
    policy: str


def op_degree(op: DiffOp) -> int:
    """d(L): max rational degree of the monic-normalized lower coefficients."""
    if op.is_zero():
        raise ZeroOperator("degree of the zero operator")
    lead = op.lead
    degs = [(c / lead).rat_degree() for c in op.coeffs[:-1] if not c.is_zero()]
    return max(degs, default=0)


def _branch_bases(op: DiffOp):
    """The exponent/polynomial-part bases the certificate search would twist by."""
    from .riccati import _finite_singular_points, _is_regular_singular

    f = op.field
    points, _, _ = _finite_singular_points(op)
    choices = []
    kept = []
    for p in points:
        if not _is_regular_singular(op, p):
            kept.append(p)
            choices.append([Scalar.zero(f)])
            continue
        rep = roots_in_field(indicial_at(op, p))
        roots = []
        for r, _ in rep.roots:
            if all(r != q for q in roots):
                roots.append(r)
        kept.append(p)
        choices.append(roots if roots else [Scalar.zero(f)])
    parts, _ = poly_part_candidates(op)
    for combo in itertools.product(*choices):
        a0 = RatFun.zero(f)
        for p, e in zip(kept, combo):
            if not e.is_zero():
                a0 = a0 + RatFun.make(UniPoly.constant(e),
                                      UniPoly.x(f) - UniPoly.constant(p))
        for part in parts:
            yield a0 + RatFun.from_poly(part)


def exponential_bound(op: DiffOp, mode: str = "sound") -> int:
    """An integer bounding the rational degree of every certificate.

    empirical: exact max over a complete certificate search (0 when there are
    no certificates; raises IncompleteSearch otherwise).  sound: S + D + B
    with S the degree of the squarefree part of the cleared leading
    coefficient, D the max candidate polynomial-part degree and B the max
    nonnegative integer root at infinity over all candidate twists.
    """
    if mode == "empirical":
        rep = expsols(op)
        if not rep.complete:
            raise IncompleteSearch("; ".join(rep.reasons) or "incomplete certificate search")
        return max((c.a.rat_degree() for c in rep.certificates), default=0)
    if mode != "sound":
        raise ValueError(f"unknown bound mode {mode!r}")
    s_term = squarefree_part(cleared_coeffs(op)[-1]).degree
    parts, _ = poly_part_candidates(op)
    d_term = max((p.degree for p in parts if not p.is_zero()), default=0)
    b_term = 0
    for base in _branch_bases(op):
        twisted = twist(op, base)
        roots = [r for r in integer_roots(indicial_at_infinity(twisted)) if r >= 0]
        if roots:
            b_term = max(b_term, max(roots))
    return s_term + d_term + b_term


def b_of(op: DiffOp, mode: str = "sound") -> BoundReport:
    """Evaluate the wedge-term maximum and the n^3 factor bound."""
    if op.order < 1:
        raise ZeroOperator("bound of an operator of order < 1")
    n = op.order
    terms = []
    for s in range(1, n + 1):
        red = exterior_reduction(op, s)
        binom = math.comb(n, s)
        deg_t = matrix_degree(red.transform)
        nbound = exponential_bound(red.scalar_op, mode) if binom > 1 else 0
        value = 2 * binom * deg_t + binom * (binom - 1) * nbound
        terms.append(WedgeTerm(s=s, binom=binom, transform_degree=deg_t,
                               exp_bound=nbound, value=value))
    b_value = max(t.value for t in terms)
    return BoundReport(terms=tuple(terms), b_value=b_value,
                       factor_bound=n ** 3 * b_value, mode=mode,
                       policy=CYCLIC_POLICY)


def check_factor_bound(op: DiffOp, factor: DiffOp, report: BoundReport) -> bool:
    """d(monic(factor)) <= factor_bound, after verifying divisibility."""
    if factor.is_zero() or op.is_zero():
        raise ZeroOperator("factor bound check with a zero operator")
    if factor.order >= op.order:
        raise NotADivisor("factor must have order strictly below the operator")
    if not op.rdivide(factor)[1].is_zero():
        raise NotADivisor("operator is not right-divisible by the claimed factor")
    return op_degree(factor.monic()) <= report.factor_bound
