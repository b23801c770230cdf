"""Irreducibility for orders 1..3 via first-order factors and the adjoint.

An order-n operator with n <= 3 is reducible exactly when it has a
first-order right factor or its adjoint does (the latter supplies the
order-(n-1) right factors).  Verdicts are three-valued: Reducible always
carries an exactly verified witness, Irreducible is only reported when every
underlying certificate search was complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedOrder, UnsupportedOrderGap
from .ore import DiffOp
from .riccati import expsols

IRREDUCIBLE = "Irreducible"
REDUCIBLE = "Reducible"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class IrredVerdict:
    status: str
    witness: tuple | None  # (right factor P, quotient Q) with Q*P == L
    diagnostics: tuple  # tuple[str, ...]


def adjoint(op: DiffOp) -> DiffOp:
    """The formal adjoint sum (-1)^i D^i b_i; swaps left and right factors."""
    f = op.field
    out = DiffOp.zero(f)
    dpow = DiffOp.one(f)
    for i, b in enumerate(op.coeffs):
        if i > 0:
            dpow = DiffOp.delta(f) * dpow
        if not b.is_zero():
            term = dpow * DiffOp.from_ratfun(b)
            out = out + (term if i % 2 == 0 else -term)
    return out


def right_factor(op: DiffOp, s: int) -> tuple[list[DiffOp], bool, tuple]:
    """Monic right factors of order s in {1, ord-1}; (factors, complete, reasons)."""
    n = op.order
    if s == 1:
        rep = expsols(op)
        factors = [DiffOp.first_order(c.a) for c in rep.certificates]
        return factors, rep.complete, rep.reasons
    if s == n - 1:
        rep = expsols(adjoint(op))
        factors = []
        for c in rep.certificates:
            quo, rem = adjoint(op).rdivide(DiffOp.first_order(c.a))
            if not rem.is_zero():
                continue
            cand = adjoint(quo).monic()
            if op.rdivide(cand)[1].is_zero():
                factors.append(cand)
        return factors, rep.complete, rep.reasons
    raise UnsupportedOrderGap(f"right factors searched only at orders 1 and {n - 1}")


def proper_right_factors(op: DiffOp) -> tuple[list[DiffOp], bool, tuple]:
    """All verified proper monic right factors at the searched orders.

    For n <= 3 the searched orders (1 and n-1) exhaust proper factor orders.
    """
    n = op.order
    if n < 1 or n > 3:
        raise UnsupportedOrder(f"irreducibility testing covers orders 1..3, got {n}")
    factors: list[DiffOp] = []
    complete = True
    reasons: tuple = ()
    for s in ([1] if n <= 2 else [1, 2]):
        fs, comp, rs = right_factor(op, s)
        factors.extend(fs)
        complete = complete and comp
        reasons = reasons + rs
    return factors, complete, tuple(dict.fromkeys(reasons))


def irreducible(op: DiffOp) -> IrredVerdict:
    """Decide irreducibility for 1 <= ord <= 3."""
    n = op.order
    if n < 1 or n > 3:
        raise UnsupportedOrder(f"irreducibility testing covers orders 1..3, got {n}")
    if n == 1:
        return IrredVerdict(IRREDUCIBLE, None, ())
    factors, complete, reasons = proper_right_factors(op)
    if factors:
        p = factors[0]
        quo, rem = op.rdivide(p)
        assert rem.is_zero()
        return IrredVerdict(REDUCIBLE, (p, quo), reasons)
    if complete:
        return IrredVerdict(IRREDUCIBLE, None, ())
    return IrredVerdict(INCONCLUSIVE, None, reasons)


def verify_factorization(op: DiffOp, quo: DiffOp, factor: DiffOp) -> bool:
    """Exact check quo * factor == op."""
    return quo * factor == op
