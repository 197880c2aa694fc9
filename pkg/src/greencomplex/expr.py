"""Graph arithmetic expressions such as ``"K3*P2"`` or ``"1 + star(4) + C5"``.

Grammar::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom | INT | '(' expr ')'
    atom   := K<n> | P<n> | C<n> | S<n> | L<n> | Oct
            | complete(n) | point(n) | cycle(n) | star(n) | linear(n)

A bare integer n is the complete graph K_n, so ``1 + G`` is the cone.
``*`` binds tighter than ``+``.
"""

from __future__ import annotations

import re

from . import corpus
from .arithmetic import zykov_join, zykov_product
from .complex import Graph


class ExpressionError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")

_SHORT = {
    "K": corpus.complete,
    "P": corpus.points,
    "C": corpus.cycle,
    "S": corpus.star,
    "L": corpus.linear,
}
_CALLS = {
    "complete": corpus.complete,
    "point": corpus.points,
    "points": corpus.points,
    "cycle": corpus.cycle,
    "star": corpus.star,
    "linear": corpus.linear,
}
_NAMED = {
    "Oct": corpus.octahedron,
    "oct": corpus.octahedron,
    "Windmill": corpus.windmill,
    "Bowtie": corpus.bowtie,
}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        assert m is not None
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("int", num, start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif op in "+*()":
            tokens.append((op, op, start))
        else:
            raise ExpressionError(f"unexpected character {op!r} at column {start + 1}")
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            where = self.tokens[self.i][2] + 1 if self.i < len(self.tokens) else len(self.text) + 1
            raise ExpressionError(f"expected {kind!r} at column {where}")
        value = self.tokens[self.i][1]
        self.i += 1
        return value

    def parse(self) -> Graph:
        if not self.tokens:
            raise ExpressionError("empty expression")
        g = self.expr()
        if self.i != len(self.tokens):
            raise ExpressionError(f"trailing input at column {self.tokens[self.i][2] + 1}")
        return g

    def expr(self) -> Graph:
        g = self.term()
        while self.peek() == "+":
            self.take("+")
            g = zykov_join(g, self.term())
        return g

    def term(self) -> Graph:
        g = self.factor()
        while self.peek() == "*":
            self.take("*")
            g = zykov_product(g, self.factor())
        return g

    def factor(self) -> Graph:
        kind = self.peek()
        if kind == "(":
            self.take("(")
            g = self.expr()
            self.take(")")
            return g
        if kind == "int":
            return corpus.complete(int(self.take("int")))
        if kind == "name":
            return self.atom(self.take("name"))
        raise ExpressionError("expected a graph")

    def atom(self, name: str) -> Graph:
        if name in _NAMED:
            return _NAMED[name]()
        if name in _CALLS:
            self.take("(")
            n = int(self.take("int"))
            self.take(")")
            return _build(_CALLS[name], n, name)
        m = re.fullmatch(r"([KPCSL])(\d+)", name)
        if m:
            return _build(_SHORT[m.group(1)], int(m.group(2)), name)
        raise ExpressionError(f"unknown graph {name!r}")


def _build(make, n: int, name: str) -> Graph:
    try:
        return make(n)
    except ValueError as exc:
        raise ExpressionError(f"{name}: {exc}") from None


def evaluate(text: str) -> Graph:
    return _Parser(text).parse()
