"""Text syntax for chord polynomials.

Grammar::

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" ["-"] int)?
    atom   := "b(" int "," int ")" | "v(" int ")" | "Q" | "q" | int | "(" expr ")"

``Q`` is ``q^{1/2}`` and ``q`` is ``q``.  Printing uses only ``Q`` so exponents
stay integral and output parses back to the same element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import AlgebraElem, word_key
from .ring import RingElem, join_signed_terms


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class QHalf:
    pass


@dataclass(frozen=True)
class VGen:
    i: int


@dataclass(frozen=True)
class BGen:
    i: int
    j: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([bvQq])|([()+\-*^,]))")


def _tokenize(src: str) -> list:
    tokens, pos = [], 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[start]!r}", start)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("<end>", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, n: int):
        self.tokens = _tokenize(src)
        self.k = 0
        self.n = n

    def peek(self):
        return self.tokens[self.k][0]

    def pos(self):
        return self.tokens[self.k][1]

    def take(self, expected=None):
        tok, pos = self.tokens[self.k]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r} but found {tok!r}", pos)
        self.k += 1
        return tok

    def integer(self) -> int:
        tok, pos = self.tokens[self.k]
        if not tok.isdigit():
            raise ParseError(f"expected an integer but found {tok!r}", pos)
        self.k += 1
        return int(tok)

    def index(self) -> int:
        pos = self.pos()
        i = self.integer()
        if not 1 <= i <= self.n:
            raise ParseError(f"index {i} out of range 1..{self.n}", pos)
        return i

    def expr(self):
        if self.peek() == "-":
            self.take()
            node = Neg(self.term())
        else:
            node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = Add(node, rhs if op == "+" else Neg(rhs))
        return node

    def term(self):
        node = self.factor()
        while self.peek() == "*":
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            pos = self.pos()
            if self.peek() == "-":
                self.take()
                sign = -1
            e = sign * self.integer()
            if e < 0 and isinstance(node, BGen):
                raise ParseError("chord generators take nonnegative exponents only", pos)
            node = Pow(node, e)
        return node

    def atom(self):
        tok, pos = self.tokens[self.k]
        if tok == "b":
            self.take()
            self.take("(")
            i = self.index()
            self.take(",")
            j = self.index()
            self.take(")")
            if i == j:
                raise ParseError("no single-vertex generator", pos)
            return BGen(min(i, j), max(i, j))
        if tok == "v":
            self.take()
            self.take("(")
            i = self.index()
            self.take(")")
            return VGen(i)
        if tok == "Q":
            self.take()
            return QHalf()
        if tok == "q":
            self.take()
            return Pow(QHalf(), 2)
        if tok.isdigit():
            return IntLiteral(self.integer())
        if tok == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {tok!r}", pos)


def parse_expression(src: str, n: int):
    """Parse ``src`` into an expression tree over ``n`` punctures."""
    p = _Parser(src, n)
    node = p.expr()
    if p.peek() != "<end>":
        raise ParseError(f"unexpected {p.peek()!r}", p.pos())
    return node


def evaluate(node, n: int) -> AlgebraElem:
    if isinstance(node, IntLiteral):
        return AlgebraElem.scalar(RingElem.const(n, node.value))
    if isinstance(node, QHalf):
        return AlgebraElem.scalar(RingElem.qhalf(n))
    if isinstance(node, VGen):
        return AlgebraElem.scalar(RingElem.vgen(n, node.i))
    if isinstance(node, BGen):
        return AlgebraElem.generator(n, node.i, node.j)
    if isinstance(node, Neg):
        return -evaluate(node.arg, n)
    if isinstance(node, Add):
        return evaluate(node.left, n) + evaluate(node.right, n)
    if isinstance(node, Mul):
        return evaluate(node.left, n) * evaluate(node.right, n)
    if isinstance(node, Pow):
        base = evaluate(node.base, n)
        if node.exp >= 0:
            return base ** node.exp
        if len(base) == 1 and () in base.terms and base.coeff(()).is_unit():
            return AlgebraElem.scalar(base.coeff(()) ** node.exp)
        raise ValueError("negative exponents apply to unit scalars only")
    raise TypeError(f"unknown node {node!r}")


def parse_element(src: str, n: int) -> AlgebraElem:
    return evaluate(parse_expression(src, n), n)


def _word_factors(word: tuple) -> list[str]:
    out = []
    k = 0
    while k < len(word):
        run = 1
        while k + run < len(word) and word[k + run] == word[k]:
            run += 1
        out.append(str(word[k]) if run == 1 else f"{word[k]}^{run}")
        k += run
    return out


def format_element(a: AlgebraElem) -> str:
    """Text form, highest words first; parses back to ``a``."""
    if a.is_zero():
        return "0"
    parts = []
    for w, coeff in sorted(a.items(), key=lambda t: word_key(t[0]), reverse=True):
        letters = _word_factors(w)
        for (qh, v), c in sorted(coeff.items(), reverse=True):
            factors = []
            if qh:
                factors.append("Q" if qh == 1 else f"Q^{qh}")
            for i, e in enumerate(v, start=1):
                if e:
                    factors.append(f"v({i})" if e == 1 else f"v({i})^{e}")
            parts.append((c, factors + letters))
    return join_signed_terms(parts)
