"""Small exact linear algebra over any field-like element type.

Entries must support +, -, *, /, unary minus and is_zero(); used with both
Scalar and RatFun matrices.  Everything is plain Gaussian elimination; sizes
here are tiny (wedge systems and polynomial-solution ansatz matrices).
"""

from __future__ import annotations


def _pivot(rows, col, start, nrows):
    for r in range(start, nrows):
        if not rows[r][col].is_zero():
            return r
    return None


def rref(matrix, zero, one):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        p = _pivot(rows, c, r, len(rows))
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = one / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for r2 in range(len(rows)):
            if r2 != r and not rows[r2][c].is_zero():
                f = rows[r2][c]
                rows[r2] = [a - f * b for a, b in zip(rows[r2], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace(matrix, zero, one):
    """Basis of the right nullspace of `matrix` (rows x cols)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix, zero, one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve(matrix, rhs, zero, one):
    """One solution of matrix @ x = rhs, or None when inconsistent."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    rows, pivots = rref(aug, zero, one)
    for r in range(len(rows)):
        if all(rows[r][c].is_zero() for c in range(ncols)) and not rows[r][ncols].is_zero():
            return None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = rows[r][ncols]
    return x


def rank(matrix, zero, one) -> int:
    _, pivots = rref(matrix, zero, one)
    return len(pivots)


def det(matrix, zero, one):
    """Determinant by fraction elimination (square matrices)."""
    n = len(matrix)
    rows = [list(r) for r in matrix]
    out = one
    sign = 1
    for c in range(n):
        p = _pivot(rows, c, c, n)
        if p is None:
            return zero
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        out = out * rows[c][c]
        inv = one / rows[c][c]
        for r2 in range(c + 1, n):
            if not rows[r2][c].is_zero():
                f = rows[r2][c] * inv
                rows[r2] = [a - f * b for a, b in zip(rows[r2], rows[c])]
    return out if sign > 0 else -out
