"""Recursive-descent parser for scalar literals and polynomial expressions.

Grammar (shared by every entry point)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'

Multiplication is always explicit: ``x1 x2`` is a syntax error. Division is
only allowed by a nonzero scalar. The name ``t`` denotes the extension
generator of the field.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import BadScalarLiteral, ExprSyntaxError, UnknownGenerator
from .exactfield import Field, Scalar

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\d*\.\d+)|(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\S))")


def tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            break
        if m.group(1):
            raise BadScalarLiteral(f"decimal literal {m.group(1)!r} at position "
                                   f"{m.start(1)}; use a fraction a/b")
        if m.group(2):
            tokens.append(("INT", int(m.group(2)), m.start(2)))
        elif m.group(3):
            tokens.append(("NAME", m.group(3), m.start(3)))
        elif m.group(4):
            ch = m.group(4)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start(4))
            tokens.append((ch, ch, m.start(4)))
        pos = m.end()
    tokens.append(("END", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src, field: Field, lookup):
        self.src = src
        self.field = field
        self.lookup = lookup
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ExprSyntaxError(f"unexpected {tok[1] if tok[1] is not None else 'end'!r}",
                                  tok[2], (repr(kind),))
        return tok

    def parse(self):
        if self.peek()[0] == "END":
            raise ExprSyntaxError("empty expression", 0, ("a term",))
        value = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2],
                                  ("'+'", "'-'", "'*'", "'/'", "end"))
        return value

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if not isinstance(rhs, Scalar):
                    raise BadScalarLiteral(f"division by a non-scalar at position {pos}")
                if not rhs:
                    raise BadScalarLiteral(f"division by zero at position {pos}")
                value = value * rhs.inverse()
        return value

    def factor(self):
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("INT")
            base = value
            value = self.field.one()
            for _ in range(tok[1]):
                value = value * base
        return value

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "INT":
            return self.field(val)
        if kind == "NAME":
            return self.lookup(val, pos)
        if kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ExprSyntaxError(f"unexpected {val if val is not None else 'end'!r}", pos,
                              ("number", "generator", "'('"))


def _scalar_lookup(field):
    def lookup(name, pos):
        if name == "t":
            if field.minpoly is None:
                raise BadScalarLiteral(f"'t' used at position {pos} but the field has no extension")
            return field.gen()
        raise BadScalarLiteral(f"unknown symbol {name!r} at position {pos}")
    return lookup


def parse_scalar(src: str, field: Field) -> Scalar:
    """Parse a scalar literal such as ``3/2*t - 1``."""
    value = _Parser(src, field, _scalar_lookup(field)).parse()
    if not isinstance(value, Scalar):  # pragma: no cover - lookup only yields scalars
        raise BadScalarLiteral(f"{src!r} is not a scalar")
    return value


def parse_ncpoly(src: str, ctx):
    """Parse a noncommutative polynomial in the generators of ``ctx``."""
    field = ctx.field
    scalar_lookup = _scalar_lookup(field)

    def lookup(name, pos):
        if name in ctx.index:
            return ctx.gen(name)
        if name == "t":
            return scalar_lookup(name, pos)
        raise UnknownGenerator(f"unknown generator {name!r} at position {pos}")

    value = _Parser(src, field, lookup).parse()
    if isinstance(value, Scalar):
        return ctx.scalar(value)
    return value


def parse_commpoly(src: str, field: Field, names=("x", "y", "z")):
    """Parse a commutative polynomial in x, y, z (or the given names)."""
    from .commalg import CommPoly
    n = len(names)
    index = {nm: k for k, nm in enumerate(names)}
    scalar_lookup = _scalar_lookup(field)

    def lookup(name, pos):
        if name in index:
            e = [0] * n
            e[index[name]] = 1
            return CommPoly(field, {tuple(e): field.one()}, n)
        if name == "t":
            return scalar_lookup(name, pos)
        raise UnknownGenerator(f"unknown variable {name!r} at position {pos}")

    value = _Parser(src, field, lookup).parse()
    if isinstance(value, Scalar):
        return CommPoly.constant(field, value, n)
    return value


def parse_univariate(src: str, characteristic=0, var="t"):
    """Coefficients (low to high) of a univariate polynomial over the prime field."""
    field = Field(characteristic)
    poly = parse_commpoly(src, field, names=(var,))
    deg = poly.total_degree() or 0
    coeffs = [Fraction(0)] * (deg + 1)
    for (e,), c in poly.terms.items():
        coeffs[e] = c.c[0]
    return coeffs


def parse_matrix(src: str, field: Field):
    """Rows separated by ';', entries by ','; entries are scalar literals."""
    rows = [r for r in src.split(";") if r.strip()]
    out = [[parse_scalar(e, field) for e in r.split(",")] for r in rows]
    if not out or any(len(r) != len(out) for r in out):
        raise ExprSyntaxError(f"matrix {src!r} is not square")
    return out


def parse_point(src: str, field: Field):
    """Comma-separated coordinates, optionally wrapped in parentheses."""
    body = src.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    return [parse_scalar(e, field) for e in body.split(",")]
