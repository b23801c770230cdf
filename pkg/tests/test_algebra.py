"""Field-tower arithmetic, canonical forms, degrees and root finding."""

import random
from fractions import Fraction

import pytest

from lodo import (DivisionByZero, FieldDescriptor, RatFun, Scalar, UniPoly,
                  UnsupportedDegree, poly_gcd, roots_in_field, squarefree_part)
from helpers import Q, QA, QI, QIA, nonzero_scalar, scalar, ratfun, nonzero_ratfun


def test_rational_arithmetic():
    half = Scalar.from_rational(Q, Fraction(1, 2))
    third = Scalar.from_rational(Q, Fraction(1, 3))
    assert half + third == Scalar.from_rational(Q, Fraction(5, 6))


def test_generator_relation():
    i = Scalar.gen(QI)
    assert i * i == Scalar.from_rational(QI, -1)


def test_ratfun_reduction():
    x = UniPoly.x(Q)
    r = RatFun.make(x * x - UniPoly.one(Q), x - UniPoly.one(Q))
    assert r == RatFun.from_poly(x + UniPoly.one(Q))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Scalar.one(Q) / Scalar.zero(Q)
    with pytest.raises(DivisionByZero):
        RatFun.make(UniPoly.one(Q), UniPoly.zero(Q))


def test_field_mismatch():
    from lodo import FieldMismatch
    with pytest.raises(FieldMismatch):
        Scalar.one(Q) + Scalar.one(QI)


def test_rat_degree_convention():
    x = UniPoly.x(Q)
    assert RatFun.make(UniPoly.one(Q), x).rat_degree() == 1
    a = Scalar.param(QA, "a")
    xa = UniPoly.x(QA)
    f = RatFun.make(xa * xa - UniPoly.constant(a * a), xa * xa)
    assert f.rat_degree() == 2
    assert RatFun.zero(Q).rat_degree() == -1


def test_canonical_round_trip():
    # constructing then deconstructing reproduces identical coefficient data
    rng = random.Random(1)
    for _ in range(50):
        f = ratfun(rng, QIA)
        again = RatFun.make(f.num, f.den)
        assert again.num.coeffs == f.num.coeffs and again.den.coeffs == f.den.coeffs
        assert f.den.lead.is_one()


def test_field_axioms_random_triples():
    rng = random.Random(2)
    for field in (Q, QI, QIA):
        for _ in range(40):
            a, b, c = (scalar(rng, field) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
        for _ in range(20):
            a = nonzero_scalar(rng, field)
            assert a * a.inv() == Scalar.one(field)


def test_rat_degree_submultiplicative():
    rng = random.Random(3)
    for _ in range(60):
        f, g = ratfun(rng, Q), ratfun(rng, Q)
        if f.is_zero() or g.is_zero():
            continue
        assert (f * g).rat_degree() <= f.rat_degree() + g.rat_degree()


def test_poly_gcd_examples():
    x = UniPoly.x(Q)
    one = UniPoly.one(Q)
    assert poly_gcd(x * x - one, x - one) == x - one
    assert poly_gcd(x, x + one) == one
    assert squarefree_part(x ** 3 * (x - one)) == x * (x - one)


def test_roots_examples():
    a = Scalar.param(QA, "a")
    xa = UniPoly.x(QA)
    rep = roots_in_field(xa * xa - UniPoly.constant(a * a))
    assert {str(r) for r, _ in rep.roots} == {"a", "-a"} and rep.complete

    x = UniPoly.x(Q)
    rep_q = roots_in_field(x * x + UniPoly.one(Q))
    assert rep_q.roots == () and not rep_q.complete
    xi = UniPoly.x(QI)
    rep_qi = roots_in_field(xi * xi + UniPoly.one(QI))
    assert {str(r) for r, _ in rep_qi.roots} == {"i", "-i"} and rep_qi.complete

    rep_sq = roots_in_field(x * x)
    assert rep_sq.roots[0][1] == 2 and rep_sq.complete


def test_roots_require_complete():
    x = UniPoly.x(Q)
    with pytest.raises(UnsupportedDegree):
        roots_in_field(x * x + UniPoly.one(Q), require_complete=True)


def test_roots_are_exact_with_multiplicity():
    rng = random.Random(4)
    for field in (Q, QI):
        for _ in range(25):
            # plant rational roots with multiplicities, times a rootless factor
            x = UniPoly.x(field)
            p = UniPoly.one(field)
            planted = {}
            for _ in range(rng.randint(1, 3)):
                r = Fraction(rng.randint(-4, 4))
                m = rng.randint(1, 2)
                planted[r] = planted.get(r, 0) + m
                p = p * (x - UniPoly.constant(Scalar.from_rational(field, r))) ** m
            rep = roots_in_field(p)
            got = {}
            for root, mult in rep.roots:
                got[root.as_rational()] = mult
            assert got == planted
            for root, mult in rep.roots:
                q = p
                for _ in range(mult):
                    val = q.eval(Scalar.from_rational(field, root.as_rational()))
                    assert val.is_zero()
                    q = q._synth_div(Scalar.from_rational(field, root.as_rational()))
                assert not q.eval(Scalar.from_rational(field, root.as_rational())).is_zero()


def test_scalar_sqrt_dispatch():
    a = Scalar.param(QA, "a")
    four_a2 = Scalar.from_rational(QA, 4) * a * a
    root, decided = four_a2.sqrt()
    assert decided and root is not None and root * root == four_a2
    r2, d2 = Scalar.from_rational(QI, -4).sqrt()
    assert d2 and r2 * r2 == Scalar.from_rational(QI, -4)
    r3, d3 = Scalar.from_rational(Q, 3).sqrt()
    assert r3 is None and d3
    r4, d4 = (a * a + Scalar.one(QA)).sqrt()
    assert r4 is None and d4


def test_min_poly_validation():
    with pytest.raises(ValueError):
        FieldDescriptor("t", (1, 2, 1))  # (t+1)^2 not squarefree
    with pytest.raises(ValueError):
        FieldDescriptor("t", (-1, 0, 1))  # rational roots
    with pytest.raises(ValueError):
        FieldDescriptor("i", (1, 0, 1), ("i",))  # name clash
    with pytest.raises(ValueError):
        FieldDescriptor(params=("x",))  # reserved
