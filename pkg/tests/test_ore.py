"""Ore ring arithmetic: product, action, right division, GCRD."""

import random

import pytest

from lodo import (DiffOp, DivisionByZeroOperator, RatFun, UniPoly, ZeroOperator,
                  gcrd, parse_op)
from helpers import Q, QI, diffop, nonzero_diffop, ratfun


def test_defining_relation():
    assert parse_op("D*x", Q) == parse_op("x*D + 1", Q)


def test_product_hand_oracle():
    # hand Leibniz: (D-1)(D-x) = D^2 - xD - 1 - D + x
    lhs = parse_op("(D - 1)*(D - x)", Q)
    rhs = parse_op("D^2 - (x + 1)*D + (x - 1)", Q)
    assert lhs == rhs


def test_mul_identity():
    rng = random.Random(20)
    one = DiffOp.one(Q)
    for _ in range(20):
        op = diffop(rng, Q)
        assert op * one == op and one * op == op


def test_mul_order_and_lead():
    rng = random.Random(21)
    for _ in range(40):
        a, b = nonzero_diffop(rng, Q), nonzero_diffop(rng, Q)
        p = a * b
        assert p.order == a.order + b.order
        assert p.lead == a.lead * b.lead


def test_mul_associative_distributive():
    rng = random.Random(22)
    for _ in range(15):
        a = diffop(rng, Q, max_order=2, max_deg=2)
        b = diffop(rng, Q, max_order=2, max_deg=2)
        c = diffop(rng, Q, max_order=2, max_deg=2)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_apply_examples():
    x3 = parse_op("x^3", Q).coeff(0)
    assert parse_op("D^2 + 1", Q).apply(x3) == parse_op("x^3 + 6*x", Q).coeff(0)
    zero = RatFun.zero(Q)
    assert parse_op("D - x", Q).apply(zero).is_zero()


def test_apply_module_action():
    rng = random.Random(23)
    for _ in range(15):
        a = diffop(rng, Q, max_order=2, max_deg=2)
        b = diffop(rng, Q, max_order=2, max_deg=2)
        f = ratfun(rng, Q, max_deg=2)
        assert (a * b).apply(f) == a.apply(b.apply(f))


def test_rdivide_example():
    d2 = parse_op("D^2", Q)
    quo, rem = d2.rdivide(parse_op("D - x", Q))
    assert quo == parse_op("D + x", Q)
    assert rem == parse_op("x^2 + 1", Q)
    assert quo * parse_op("D - x", Q) + rem == d2


def test_rdivide_self_and_planted():
    L = parse_op("(D - 1)*(D - x)", Q)
    assert L.rdivide(L) == (DiffOp.one(Q), DiffOp.zero(Q))
    quo, rem = L.rdivide(parse_op("D - x", Q))
    assert rem.is_zero() and quo == parse_op("D - 1", Q)


def test_rdivide_round_trip_random():
    rng = random.Random(24)
    for _ in range(120):
        L = diffop(rng, Q, max_order=4)
        P = nonzero_diffop(rng, Q, max_order=3)
        quo, rem = L.rdivide(P)
        assert quo * P + rem == L
        assert rem.is_zero() or rem.order < P.order


def test_rdivide_zero_divisor():
    with pytest.raises(DivisionByZeroOperator):
        parse_op("D", Q).rdivide(DiffOp.zero(Q))


def test_gcrd_examples():
    L1 = parse_op("(D - 1)*(D - x)", Q)
    L2 = parse_op("(D + 1)*(D - x)", Q)
    g = gcrd(L1, L2)
    assert g == parse_op("D - x", Q)
    assert L1.rdivide(g)[1].is_zero() and L2.rdivide(g)[1].is_zero()
    assert gcrd(L1, DiffOp.one(Q)) == DiffOp.one(Q)
    assert gcrd(L1, DiffOp.zero(Q)) == L1.monic()


def test_gcrd_euclid_step_property():
    rng = random.Random(25)
    for _ in range(25):
        a = nonzero_diffop(rng, Q, max_order=3, max_deg=2)
        b = nonzero_diffop(rng, Q, max_order=2, max_deg=2)
        g = gcrd(a, b)
        assert a.rdivide(g)[1].is_zero()
        assert b.rdivide(g)[1].is_zero()
        assert g == gcrd(b, a.rdivide(b)[1]) or a.rdivide(b)[1].is_zero()


def test_monic():
    assert parse_op("x*D - x^2", Q).monic() == parse_op("D - x", Q)
    assert parse_op("2*D^2 + 2", Q).monic() == parse_op("D^2 + 1", Q)
    rng = random.Random(26)
    for _ in range(10):
        op = nonzero_diffop(rng, Q)
        assert op.monic().monic() == op.monic()
    with pytest.raises(ZeroOperator):
        DiffOp.zero(Q).monic()
