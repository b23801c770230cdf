"""Companion matrices, exterior systems and cyclic-vector reduction.

The s-th exterior system extends the first-order system matrix A to the
wedge basis e_I (I an s-subset of row indices, lexicographic); a cyclic
covector then rebuilds a scalar operator together with the stacked
transformation matrix whose degree feeds the factor-degree bound.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import linalg
from .errors import BadDimension, NoCyclicVectorFound, OrderZero
from .ore import DiffOp
from .ratfun import RatFun
from .scalar import Scalar

#: identifies the covector search policy; reported wherever a bound depends on it
CYCLIC_POLICY = "cyclic:e-basis-then-seeded-poly25:v1"

MatrixRF = tuple  # tuple[tuple[RatFun, ...], ...]


@dataclass(frozen=True)
class ExteriorReduction:
    s: int
    system: MatrixRF
    scalar_op: DiffOp
    transform: MatrixRF
    cyclic_row: tuple  # tuple[RatFun, ...]


def companion(op: DiffOp) -> MatrixRF:
    """The n x n companion matrix of a monic-normalized operator."""
    if op.order < 1:
        raise OrderZero("companion matrix needs order >= 1")
    f = op.field
    n = op.order
    lead = op.lead
    rows = []
    zero, one = RatFun.zero(f), RatFun.one(f)
    for i in range(n - 1):
        rows.append(tuple(one if j == i + 1 else zero for j in range(n)))
    rows.append(tuple(-(op.coeff(j) / lead) for j in range(n)))
    return tuple(rows)


def wedge_system(mat: MatrixRF, s: int) -> MatrixRF:
    """The derivation extension of `mat` to s-fold wedges.

    Basis: e_I for s-subsets I in lexicographic order; replacing slot k of I
    by j costs the sign of sorting j into I \\ {i_k}.
    """
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise BadDimension("wedge system needs a square matrix")
    if not 1 <= s <= n:
        raise BadDimension(f"wedge order must lie in 1..{n}")
    f = mat[0][0].field
    subsets = list(itertools.combinations(range(n), s))
    index = {I: k for k, I in enumerate(subsets)}
    m = len(subsets)
    zero = RatFun.zero(f)
    out = [[zero] * m for _ in range(m)]
    for I in subsets:
        ri = index[I]
        rest_cache = [tuple(v for v in I if v != ik) for ik in I]
        for k, ik in enumerate(I):
            rest = rest_cache[k]
            for j in range(n):
                a = mat[ik][j]
                if a.is_zero():
                    continue
                if j in rest:
                    continue
                J = tuple(sorted(rest + (j,)))
                sign = sum(1 for v in rest if (ik < v < j) or (j < v < ik))
                entry = a if sign % 2 == 0 else -a
                cj = index[J]
                out[ri][cj] = out[ri][cj] + entry
    return tuple(tuple(row) for row in out)


def matrix_degree(mat: MatrixRF) -> int:
    """Max rational-function degree over the entries (0 for an empty matrix)."""
    degs = [e.rat_degree() for row in mat for e in row if not e.is_zero()]
    return max(degs, default=0)


def _row_step(row: tuple, mat: MatrixRF) -> tuple:
    """row' = derivative(row) + row * mat  (the scalarization recurrence)."""
    m = len(row)
    out = []
    for j in range(m):
        v = row[j].derivative()
        for i in range(m):
            if not row[i].is_zero() and not mat[i][j].is_zero():
                v = v + row[i] * mat[i][j]
        out.append(v)
    return tuple(out)


def _candidate_covectors(f, m: int):
    zero, one = RatFun.zero(f), RatFun.one(f)
    for i in range(m):
        yield tuple(one if j == i else zero for j in range(m))
    rng = random.Random(0xC0FFEE)
    x = RatFun.x(f)
    pool = [one, x, x * x]
    while True:
        yield tuple(pool[rng.randrange(3)].scale(Scalar.from_rational(f, rng.randint(-2, 2)))
                    for _ in range(m))


def cyclic_to_scalar(mat: MatrixRF) -> ExteriorReduction:
    """Reduce the first-order system dY = mat*Y to a scalar operator.

    Tries standard basis covectors first, then a bounded, deterministically
    seeded pool of small polynomial covectors (25 attempts total).
    """
    m = len(mat)
    if any(len(row) != m for row in mat):
        raise BadDimension("cyclic reduction needs a square matrix")
    f = mat[0][0].field
    zero, one = RatFun.zero(f), RatFun.one(f)
    attempts = 0
    for w in _candidate_covectors(f, m):
        attempts += 1
        if attempts > 25:
            break
        rows = [w]
        for _ in range(m - 1):
            rows.append(_row_step(rows[-1], mat))
        if linalg.rank([list(r) for r in rows], zero, one) < m:
            continue
        top = _row_step(rows[-1], mat)
        # solve sum_k c_k * r_k = -top  (rows stacked as the matrix T)
        cols = [[rows[k][j] for k in range(m)] for j in range(m)]
        sol = linalg.solve(cols, [-v for v in top], zero, one)
        if sol is None:
            continue
        coeffs = list(sol) + [one]
        scalar = DiffOp.make(f, coeffs)
        return ExteriorReduction(
            s=0, system=mat, scalar_op=scalar,
            transform=tuple(rows), cyclic_row=w)
    raise NoCyclicVectorFound(f"no cyclic covector within 25 attempts for size {m}")


def exterior_reduction(op: DiffOp, s: int) -> ExteriorReduction:
    """Companion, wedge and scalarization in one step, tagged with s."""
    mat = wedge_system(companion(op), s)
    red = cyclic_to_scalar(mat)
    return ExteriorReduction(s=s, system=mat, scalar_op=red.scalar_op,
                             transform=red.transform, cyclic_row=red.cyclic_row)
