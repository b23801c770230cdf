"""Parser and canonical printer for operator expressions.

Grammar (ASCII, LL(1)):

    operator := sum
    sum      := ['-'] product (('+'|'-') product)*
    product  := power (('*'|'/') power)*
    power    := atom ('^' natural)?
    atom     := 'D' | 'x' | name | integer | '(' sum ')'

'*' is mandatory between factors and is the noncommutative ring product;
'/' divides by an order-0 nonzero factor (this covers rational literals like
1/2 as well as coefficient fractions like (x^2 - 1)/x^2).  'D' and 'x' are
reserved; every other name must be the field generator or a declared
parameter.  Exponents are nonnegative integer literals.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegerExponent, ParseError, UnknownSymbol
from .fields import FieldDescriptor
from .ore import DiffOp
from .ratfun import RatFun
from .scalar import Scalar
from .unipoly import UniPoly

_OPS = set("+-*/^()")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind
        self.text = text
        self.pos = pos


def _lex(text: str) -> list[_Token]:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, field: FieldDescriptor):
        self.tokens = _lex(text)
        self.k = 0
        self.field = field

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def take(self) -> _Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def parse(self) -> DiffOp:
        op = self.sum()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected token {t.text!r}", t.pos)
        return op

    def sum(self) -> DiffOp:
        neg = False
        if self.peek().kind == "-":
            self.take()
            neg = True
        out = self.product()
        if neg:
            out = -out
        while self.peek().kind in ("+", "-"):
            t = self.take()
            rhs = self.product()
            out = out + rhs if t.kind == "+" else out - rhs
        return out

    def product(self) -> DiffOp:
        out = self.power()
        while self.peek().kind in ("*", "/"):
            t = self.take()
            rhs = self.power()
            if t.kind == "*":
                out = out * rhs
            else:
                if rhs.order > 0:
                    raise ParseError("division by an operator of positive order", t.pos)
                if rhs.is_zero():
                    raise ParseError("division by zero", t.pos)
                out = out * DiffOp.from_ratfun(rhs.coeff(0).inv())
        return out

    def power(self) -> DiffOp:
        base = self.atom()
        if self.peek().kind == "^":
            caret = self.take()
            t = self.peek()
            if t.kind == "-":
                raise NonIntegerExponent("exponent must be a nonnegative integer", t.pos)
            if t.kind != "int":
                raise NonIntegerExponent("exponent must be an integer literal", t.pos)
            self.take()
            base = base ** int(t.text)
        return base

    def atom(self) -> DiffOp:
        t = self.take()
        f = self.field
        if t.kind == "(":
            inner = self.sum()
            closing = self.take()
            if closing.kind != ")":
                raise ParseError("expected ')'", closing.pos)
            return inner
        if t.kind == "int":
            return DiffOp.from_ratfun(RatFun.from_rational(f, Fraction(int(t.text))))
        if t.kind == "name":
            if t.text == "D":
                return DiffOp.delta(f)
            if t.text == "x":
                return DiffOp.from_ratfun(RatFun.x(f))
            if t.text == f.generator:
                return DiffOp.from_ratfun(RatFun.from_scalar(Scalar.gen(f)))
            if t.text in f.params:
                return DiffOp.from_ratfun(RatFun.from_scalar(Scalar.param(f, t.text)))
            raise UnknownSymbol(f"unknown symbol {t.text!r}", t.pos)
        raise ParseError(f"unexpected token {t.text!r}", t.pos)


def parse_op(text: str, field: FieldDescriptor) -> DiffOp:
    """Parse an operator expression over the given field."""
    return _Parser(text, field).parse()


def parse_ratfun(text: str, field: FieldDescriptor) -> RatFun:
    op = parse_op(text, field)
    if op.order > 0:
        raise ParseError("expected a D-free expression", 0)
    return op.coeff(0) if not op.is_zero() else RatFun.zero(field)


def parse_scalar(text: str, field: FieldDescriptor) -> Scalar:
    r = parse_ratfun(text, field)
    if not r.is_constant():
        raise ParseError("expected an x-free expression", 0)
    return r.as_scalar()


def parse_unipoly(text: str, field: FieldDescriptor) -> UniPoly:
    r = parse_ratfun(text, field)
    if not r.is_poly():
        raise ParseError("expected a polynomial expression", 0)
    return r.as_poly()


def _ratfun_sign_split(f: RatFun) -> tuple[int, RatFun]:
    if f.is_zero():
        return 0, f
    sign, _ = f.num.lead.sign_split()
    return (sign, f) if sign >= 0 else (sign, -f)


def print_op(op: DiffOp) -> str:
    """Canonical descending-power rendering; parse_op(print_op(L)) == L."""
    if op.is_zero():
        return "0"
    terms = []
    for k in range(op.order, -1, -1):
        c = op.coeff(k)
        if c.is_zero():
            continue
        sign, mag = _ratfun_sign_split(c)
        mag_s, mag_cls = mag.render()
        if k == 0:
            body = f"({mag_s})" if mag_cls in ("sum", "fraction") else mag_s
        else:
            dpart = "D" if k == 1 else f"D^{k}"
            if mag.is_one():
                body = dpart
            else:
                coeff_w = f"({mag_s})" if mag_cls in ("sum", "fraction") else mag_s
                body = f"{coeff_w}*{dpart}"
        terms.append(("-" if sign < 0 else "+", body))
    if len(terms) == 1 and op.order == 0:
        # a bare rational function prints without wrapping; the polynomial
        # renderer distributes signs per term
        return op.coeff(0).render()[0]
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def print_ratfun(f: RatFun) -> str:
    return print_op(DiffOp.from_ratfun(f))


def print_scalar(c: Scalar) -> str:
    return print_ratfun(RatFun.from_scalar(c))


def parse_min_poly(text: str, gen: str) -> tuple:
    """Parse a minimal polynomial like 'i^2+1' into ascending coefficients."""
    field = FieldDescriptor(params=(gen,))
    p = parse_unipoly(_swap_var(text, gen), field)
    coeffs = []
    for c in p.coeffs:
        a = c.as_alg() if c.is_param_free() else None
        if a is None:
            raise ParseError("minimal polynomial must be univariate in the generator", 0)
        coeffs.append(a[0])
    return tuple(coeffs)


def _swap_var(text: str, gen: str) -> str:
    # the scalar grammar reserves 'x'; rename the generator to x for parsing
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            out.append("x" if word == gen else word)
            i = j
        else:
            out.append(ch)
            i += 1
    return "".join(out)
