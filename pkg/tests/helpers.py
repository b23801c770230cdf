"""Shared random generators for the property-test corpora.

Everything draws from an explicit random.Random so failures replay exactly.
Pools are small integers: the suites exercise structure, not bit-length.
"""

from __future__ import annotations

import random
from fractions import Fraction

from lodo import DiffOp, FieldDescriptor, RatFun, Scalar, UniPoly

Q = FieldDescriptor()
QI = FieldDescriptor("i", (1, 0, 1))
QA = FieldDescriptor(params=("a",))
QIA = FieldDescriptor("i", (1, 0, 1), ("a",))


def rational(rng: random.Random, span: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def int_unipoly(rng: random.Random, field: FieldDescriptor, max_deg: int = 3,
                span: int = 5) -> UniPoly:
    deg = rng.randint(0, max_deg)
    return UniPoly.from_ints(field, [rng.randint(-span, span) for _ in range(deg + 1)])


def int_ratfun(rng: random.Random, field: FieldDescriptor, max_deg: int = 3,
               span: int = 5) -> RatFun:
    num = int_unipoly(rng, field, max_deg, span)
    while True:
        den = int_unipoly(rng, field, max_deg, span)
        if not den.is_zero():
            return RatFun.make(num, den)


def int_diffop(rng: random.Random, field: FieldDescriptor, max_order: int = 3,
               max_deg: int = 3, span: int = 5, order: int | None = None) -> DiffOp:
    if order is None:
        order = rng.randint(0, max_order)
    coeffs = [int_ratfun(rng, field, max_deg, span) for _ in range(order)]
    while True:
        lead = int_ratfun(rng, field, max_deg, span)
        if not lead.is_zero():
            coeffs.append(lead)
            return DiffOp.make(field, coeffs)


def scalar(rng: random.Random, field: FieldDescriptor, span: int = 5) -> Scalar:
    out = Scalar.from_rational(field, rational(rng, span))
    if field.generator is not None and rng.random() < 0.4:
        out = out + Scalar.gen(field) * Scalar.from_rational(field, rational(rng, span))
    if field.params and rng.random() < 0.4:
        out = out + Scalar.param(field, rng.choice(field.params)) \
            * Scalar.from_rational(field, rational(rng, span))
    return out


def nonzero_scalar(rng: random.Random, field: FieldDescriptor, span: int = 5) -> Scalar:
    while True:
        s = scalar(rng, field, span)
        if not s.is_zero():
            return s


def unipoly(rng: random.Random, field: FieldDescriptor, max_deg: int = 3,
            span: int = 5) -> UniPoly:
    deg = rng.randint(0, max_deg)
    return UniPoly.make(field, [scalar(rng, field, span) for _ in range(deg + 1)])


def nonzero_unipoly(rng: random.Random, field: FieldDescriptor, max_deg: int = 3,
                    span: int = 5) -> UniPoly:
    while True:
        p = unipoly(rng, field, max_deg, span)
        if not p.is_zero():
            return p


def ratfun(rng: random.Random, field: FieldDescriptor, max_deg: int = 3,
           span: int = 5) -> RatFun:
    return RatFun.make(unipoly(rng, field, max_deg, span),
                       nonzero_unipoly(rng, field, max_deg, span))


def nonzero_ratfun(rng: random.Random, field: FieldDescriptor, max_deg: int = 3,
                   span: int = 5) -> RatFun:
    while True:
        f = ratfun(rng, field, max_deg, span)
        if not f.is_zero():
            return f


def diffop(rng: random.Random, field: FieldDescriptor, max_order: int = 3,
           max_deg: int = 3, span: int = 5) -> DiffOp:
    order = rng.randint(0, max_order)
    coeffs = [ratfun(rng, field, max_deg, span) for _ in range(order)]
    coeffs.append(nonzero_ratfun(rng, field, max_deg, span))
    return DiffOp.make(field, coeffs)


def nonzero_diffop(rng: random.Random, field: FieldDescriptor, max_order: int = 3,
                   max_deg: int = 3, span: int = 5) -> DiffOp:
    while True:
        op = diffop(rng, field, max_order, max_deg, span)
        if not op.is_zero():
            return op


def simple_pole_function(rng: random.Random, field: FieldDescriptor,
                         npoles: int, pole_pool=(1, 2, 3, -1, -2, -3),
                         residue_span: int = 3) -> RatFun:
    """constant + sum of simple poles with small integer residues."""
    out = RatFun.from_rational(field, rng.randint(-residue_span, residue_span))
    poles = rng.sample(pole_pool, npoles)
    x = UniPoly.x(field)
    for p in poles:
        e = rng.choice([v for v in range(-residue_span, residue_span + 1) if v])
        out = out + RatFun.make(UniPoly.from_ints(field, [e]),
                                x - UniPoly.from_ints(field, [p]))
    return out
