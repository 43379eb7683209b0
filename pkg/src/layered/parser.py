"""Recursive-descent parser for the textual form produced by ``render_expr``.

Grammar::

    expr   := "con" number | "div" "(" expr "," expr ")"
    number := ["-"] digits ["." digits]

Whitespace is allowed between any two tokens.
"""

from __future__ import annotations

from .expr import Con, Div, Expr


class ParseError(ValueError):
    """Malformed expression text. ``position`` is 1-based."""

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at position {position}: expected {expected}, found {found}")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def fail(self, expected: str):
        if self.i >= len(self.src):
            found = "end of input"
        else:
            found = repr(self.src[self.i])
        raise ParseError(self.i + 1, expected, found)

    def expect(self, token: str, expected: str | None = None):
        self.skip_ws()
        if not self.src.startswith(token, self.i):
            self.fail(expected or repr(token))
        self.i += len(token)

    def expr(self) -> Expr:
        self.skip_ws()
        if self.src.startswith("con", self.i):
            self.i += 3
            return Con(self.number())
        if self.src.startswith("div", self.i):
            self.i += 3
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Div(left, right)
        self.fail("'con' or 'div'")

    def digits(self) -> str:
        start = self.i
        while self.i < len(self.src) and self.src[self.i] in "0123456789":
            self.i += 1
        if self.i == start:
            self.fail("digit")
        return self.src[start:self.i]

    def number(self):
        self.skip_ws()
        start = self.i
        if self.src.startswith("-", self.i):
            self.i += 1
        self.digits()
        if self.src.startswith(".", self.i):
            self.i += 1
            self.digits()
        return float(self.src[start:self.i])

    def parse(self) -> Expr:
        e = self.expr()
        self.skip_ws()
        if self.i != len(self.src):
            self.fail("end of input")
        return e


def parse_expr(src: str) -> Expr:
    return _Parser(src).parse()
