"""Grammar round trips, canonical printing and parser totality."""

import random
import string

import pytest

from lodo import (DiffOp, NonIntegerExponent, ParseError, UnknownSymbol,
                  parse_op, print_op)
from helpers import Q, QI, QIA, diffop

CORPUS = [
    "D",
    "x",
    "0",
    "1",
    "-1",
    "5/3",
    "D^2",
    "x^3",
    "D*x",
    "x*D",
    "x*D + 1",
    "D - x",
    "(D - 1)*(D - x)",
    "D^2 + (1/x)*D + (x^2 - a^2)/x^2",
    "D^2 - 1",
    "(D + x)^2",
    "D^3 - x*D + 2",
    "1/x",
    "(x^2 - 1)/(x^2 + 1)",
    "a*D^2 - i",
    "(a + i)*D - a^2",
    "D*D*D",
    "x^2*D^2 + x*D + 1",
    "(D - a)*(D + a)",
    "2*D^2 - 3*D + 1/2",
    "-D + 1",
    "(1/2)*D",
    "D^0",
    "x^0",
    "((D))",
    "D + i",
    "i*D^2",
    "(x - 1)*(x - 2)*(x - 3)",
    "D^2/4",
    "(x*D + 1)*(x*D - 1)",
    "a^2*x^2*D",
    "(D + 1/x)^3",
    "x^4 - a^4",
    "D^2 + (2/x)*D - 3",
    "(i + 1)*D + (i - 1)",
    "D^2 - a*D + a^2",
    "1 - D",
    "x - D",
    "(D - 1)*(D - 2)*(D - 3)",
    "D^2 + x^2",
    "(x^2 + 1)*D^2 - 2*x*D + 2",
    "a/(a^2 + 1)*D",
    "D + (x + 1)/(x - 1)",
    "3*x^2 - 1/3",
    "D^2 + (1 - a^2)/x^2",
]


def test_bessel_parse_matches_construction():
    op = parse_op("D^2 + (1/x)*D + (x^2 - a^2)/x^2", QIA)
    assert op.order == 2
    assert op.lead.is_one()
    assert str(op.coeff(1)) == "1/x"
    assert str(op.coeff(0)) == "(x^2 - a^2)/x^2"


def test_leibniz_normalization():
    assert parse_op("D*x", Q) == parse_op("x*D + 1", Q)


def test_product_expansion_against_hand_leibniz():
    # (D-1)(D-x) = D^2 - D*x - D + x = D^2 - (x*D + 1) - D + x
    lhs = parse_op("(D - 1)*(D - x)", Q)
    assert lhs == parse_op("D^2 - (x + 1)*D + (x - 1)", Q)


def test_print_examples():
    assert print_op(parse_op("D^2 + (1/x)*D + (x^2 - a^2)/x^2", QIA)) == \
        "D^2 + (1/x)*D + ((x^2 - a^2)/x^2)"
    assert print_op(DiffOp.zero(Q)) == "0"
    assert print_op(parse_op("x*D + 1", Q)) == "x*D + 1"


def test_corpus_round_trip():
    for text in CORPUS:
        op = parse_op(text, QIA)
        assert parse_op(print_op(op), QIA) == op, text


def test_random_round_trip():
    rng = random.Random(10)
    for field, count, deg in ((Q, 60, 3), (QI, 40, 3), (QIA, 25, 2)):
        for _ in range(count):
            op = diffop(rng, field, max_deg=deg)
            assert parse_op(print_op(op), field) == op


def test_parse_errors():
    with pytest.raises(UnknownSymbol):
        parse_op("b*D", Q)
    with pytest.raises(NonIntegerExponent):
        parse_op("D^-1", Q)
    with pytest.raises(NonIntegerExponent):
        parse_op("D^(1/2)", Q)
    with pytest.raises(ParseError):
        parse_op("(D", Q)
    with pytest.raises(ParseError):
        parse_op("1/(D - 1)", Q)
    with pytest.raises(ParseError):
        parse_op("1/0", Q)
    err = None
    try:
        parse_op("D + @", Q)
    except ParseError as e:
        err = e
    assert err is not None and err.position == 4


def test_fuzz_totality():
    rng = random.Random(11)
    alphabet = "Dxai0123456789+-*/^() _" + string.ascii_lowercase[:6]
    for _ in range(400):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 24)))
        try:
            parse_op(text, QIA)
        except ParseError as e:
            assert isinstance(e.position, int)
