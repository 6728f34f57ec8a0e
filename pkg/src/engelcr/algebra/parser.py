"""Parser for polynomial graphing functions in x, y, u1, u2.

Accepted grammar (whitespace-insensitive):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | atom ('^' INT)*
    atom   := INT | 'i' | 'x' | 'y' | 'u1' | 'u2' | '(' expr ')'

Division is only allowed between numeric constants (so rationals like 3/4
can appear as coefficients), and exponents must be nonnegative integer
literals.  Errors carry a 1-based character position.
"""
from __future__ import annotations

from ..errors import ExpressionSyntaxError
from .gaussian import GaussianRational
from .polynomial import Polynomial, VARIABLES

_MAX_EXPONENT = 4096

_NAMES = {
    "i": Polynomial.constant(GaussianRational(0, 1)),
    "x": VARIABLES[0],
    "y": VARIABLES[1],
    "u1": VARIABLES[2],
    "u2": VARIABLES[3],
}


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int) -> None:
        self.kind = kind  # "int", "name", "op", "lparen", "rparen", "end"
        self.text = text
        self.pos = pos  # 1-based character position


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    n = len(text)
    k = 0
    while k < n:
        ch = text[k]
        if ch.isspace():
            k += 1
            continue
        pos = k + 1
        if ch.isdigit():
            j = k + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[k:j], pos))
            k = j
        elif ch.isalpha():
            j = k + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[k:j], pos))
            k = j
        elif ch in "+-*/^":
            tokens.append(_Token("op", ch, pos))
            k += 1
        elif ch == "(":
            tokens.append(_Token("lparen", ch, pos))
            k += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ch, pos))
            k += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(_Token("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def advance(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expr(self) -> Polynomial:
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                value = value * self.factor()
            elif tok.kind == "op" and tok.text == "/":
                self.advance()
                rhs = self.factor()
                num = value.as_gaussian()
                den = rhs.as_gaussian()
                if num is None or den is None:
                    raise ExpressionSyntaxError(
                        "division is only allowed between numeric constants", tok.pos
                    )
                if den.is_zero():
                    raise ExpressionSyntaxError("division by zero", tok.pos)
                value = Polynomial.constant(num / den)
            else:
                return value

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            inner = self.factor()
            return inner if tok.text == "+" else -inner
        value = self.atom()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.text != "^":
                return value
            self.advance()
            etok = self.peek()
            if etok.kind != "int":
                raise ExpressionSyntaxError(
                    "exponent must be a nonnegative integer", etok.pos
                )
            self.advance()
            e = int(etok.text)
            if e > _MAX_EXPONENT:
                raise ExpressionSyntaxError("exponent too large", etok.pos)
            value = value**e

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok.kind == "int":
            return Polynomial.integer(int(tok.text))
        if tok.kind == "name":
            try:
                return _NAMES[tok.text]
            except KeyError:
                raise ExpressionSyntaxError(
                    f"unknown symbol {tok.text!r} (expected i, x, y, u1, or u2)", tok.pos
                ) from None
        if tok.kind == "lparen":
            value = self.expr()
            close = self.advance()
            if close.kind != "rparen":
                raise ExpressionSyntaxError("expected ')'", close.pos)
            return value
        if tok.kind == "end":
            raise ExpressionSyntaxError("unexpected end of expression", tok.pos)
        raise ExpressionSyntaxError(f"unexpected token {tok.text!r}", tok.pos)


def parse_expression(text: str) -> Polynomial:
    """Parse a polynomial expression over x, y, u1, u2 with Gaussian-rational coefficients."""
    tokens = _tokenize(text)
    if tokens[0].kind == "end":
        raise ExpressionSyntaxError("empty expression", 1)
    parser = _Parser(tokens)
    value = parser.expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ExpressionSyntaxError(f"unexpected token {tail.text!r}", tail.pos)
    return value
