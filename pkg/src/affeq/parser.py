"""Expression grammar used by the catalog files and the command line.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-')* atom ('^' INTEGER)?
    atom   := INTEGER | VARIABLE | '(' expr ')'

Variables are the registry names: coordinates x y z u, group entries a[1,2]
b[1] c[3] d, field entries T[1] A[2,3] B[1] C[2] D U0, jet coefficients
F[0,2,1] G[3,0,0], and the auxiliary names Lam Phi Psi eps alpha beta cc ss w.
Implicit multiplication is a syntax error; so is an unknown variable.  The
printers in the algebra module emit exactly this grammar, so parse and print
are mutually inverse up to the (non-canonical) factor structure of
denominators.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Polynomial, RationalExpression, poly, var


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<op>[-+*/^()\[\],])
""", re.VERBOSE)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.peek()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)
        return self.advance()

    # grammar ----------------------------------------------------------

    def parse(self) -> RationalExpression:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return e

    def expr(self) -> RationalExpression:
        e = self.term()
        while True:
            kind, val, pos = self.peek()
            if val == "+":
                self.advance()
                e = e + self.term()
            elif val == "-":
                self.advance()
                e = e - self.term()
            else:
                return e

    def term(self) -> RationalExpression:
        e = self.factor()
        while True:
            kind, val, pos = self.peek()
            if val == "*":
                self.advance()
                e = e * self.factor()
            elif val == "/":
                self.advance()
                rhs = self.factor()
                e = _divide_syntactic(e, rhs, pos)
            else:
                return e

    def factor(self) -> RationalExpression:
        sign = 1
        while self.peek()[1] in ("+", "-"):
            if self.advance()[1] == "-":
                sign = -sign
        e = self.atom()
        kind, val, pos = self.peek()
        if val == "^":
            self.advance()
            kind, val, pos = self.peek()
            if kind != "number":
                raise ParseError("exponent must be a nonnegative integer", pos)
            self.advance()
            e = e ** int(val)
        return e if sign > 0 else -e

    def atom(self) -> RationalExpression:
        kind, val, pos = self.advance()
        if kind == "number":
            return RationalExpression.coerce(int(val))
        if kind == "name":
            name = val
            if self.peek()[1] == "[":
                self.advance()
                indices = []
                while True:
                    k2, v2, p2 = self.advance()
                    if k2 != "number":
                        raise ParseError("variable index must be an integer", p2)
                    indices.append(v2)
                    k2, v2, p2 = self.peek()
                    if v2 == ",":
                        self.advance()
                        continue
                    break
                self.expect("]")
                name = f"{name}[{','.join(indices)}]"
            try:
                v = var(name)
            except ValueError:
                raise ParseError(f"unknown variable {name!r}", pos) from None
            return RationalExpression.coerce(poly(v))
        if val == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def _divide_syntactic(lhs: RationalExpression, rhs: RationalExpression,
                      pos: int) -> RationalExpression:
    """Division as written in the source text; no vanishing certificates are
    consulted, the divisor is simply moved into the denominator factor list."""
    if rhs.is_zero():
        raise ParseError("division by zero", pos)
    num = lhs.num
    if rhs.den:
        num = num * rhs.den_product()
    if rhs.num.is_constant():
        return RationalExpression(num / rhs.num.constant_value(), lhs.den)
    return RationalExpression(num, list(lhs.den) + [(rhs.num, 1)])


def parse_expression(text: str) -> RationalExpression:
    """Parse the grammar above into a RationalExpression."""
    return _Parser(text).parse()


def parse_polynomial(text: str) -> Polynomial:
    """Parse an expression that must come out denominator-free."""
    e = parse_expression(text)
    if e.den:
        raise ParseError(f"expected a polynomial, got a denominator: {e}", 0)
    return e.num


def format_expression(obj) -> str:
    """The canonical string the parser will read back (print/parse round trip)."""
    if isinstance(obj, (Polynomial, RationalExpression)):
        return str(obj)
    return str(RationalExpression.coerce(obj))
