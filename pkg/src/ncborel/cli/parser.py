"""Lexer, recursive-descent parser and elaborator for the ASCII surface syntax.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/\\') factor)*
    factor := '-' factor | atom ('^' nat)?
    atom   := identifier | rational | '(' expr ')'

Identifiers are x1 x2 x3, dx1 dx2 dx3, lam, i and any parameter name of the
active Context (k1 k2 k3 by default).  Rationals are written ``n`` or ``n/m``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..algebra import NcPoly
from ..calculus import Form, dx, wedge
from ..errors import DegreeError, NcBorelError
from ..scalars import DEFAULT, GaussianRational, ScalarPoly

__all__ = [
    "ExprError",
    "LexicalError",
    "ExprSyntaxError",
    "ExprDegreeError",
    "Token",
    "Num",
    "Name",
    "Neg",
    "Pow",
    "BinOp",
    "tokenize",
    "parse",
    "elaborate",
    "parse_value",
]


class ExprError(NcBorelError):
    kind = "error"

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def to_json(self):
        return {"kind": self.kind, "message": self.message, "offset": self.offset}

    def __str__(self):
        where = f" at offset {self.offset}" if self.offset is not None else ""
        return f"{self.kind} error{where}: {self.message}"


class LexicalError(ExprError):
    kind = "lexical"


class ExprSyntaxError(ExprError):
    kind = "syntax"


class ExprDegreeError(ExprError):
    kind = "degree"


@dataclass(frozen=True)
class Token:
    kind: str  # num, name, op, end
    text: str
    offset: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>/\\|[-+*^()]))")


def tokenize(src):
    """Tokens with byte offsets into the UTF-8 encoding of src."""
    out = []
    pos = 0
    n = len(src)
    while True:
        while pos < n and src[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(src, pos)
        if not m or m.end() == pos:
            raise LexicalError(f"unexpected character {src[pos]!r}", _byte_offset(src, pos))
        kind = m.lastgroup
        start = m.start(kind)
        text = m.group(kind)
        if kind == "num" and "/" in text and int(text.split("/")[1]) == 0:
            raise LexicalError("zero denominator", _byte_offset(src, start))
        out.append(Token(kind, text, _byte_offset(src, start)))
        pos = m.end()
    out.append(Token("end", "", _byte_offset(src, n)))
    return out


def _byte_offset(src, pos):
    return len(src[:pos].encode("utf-8"))


# -- syntax tree ---------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    offset: int


@dataclass(frozen=True)
class Name:
    id: str
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: object
    offset: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*', '/\'
    left: object
    right: object
    offset: int


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.tok
        if t.kind != "op" or t.text != text:
            raise ExprSyntaxError(f"expected {text!r}, found {_describe(t)}", t.offset)
        return self.take()

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            t = self.take()
            node = BinOp(t.text, node, self.term(), t.offset)
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in ("*", "/\\"):
            t = self.take()
            node = BinOp(t.text, node, self.factor(), t.offset)
        return node

    def factor(self):
        t = self.tok
        if t.kind == "op" and t.text == "-":
            self.take()
            return Neg(self.factor(), t.offset)
        node = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            caret = self.take()
            e = self.tok
            if e.kind != "num" or "/" in e.text:
                raise ExprSyntaxError(f"exponent must be a natural number, found {_describe(e)}", e.offset)
            self.take()
            node = Pow(node, int(e.text), caret.offset)
        return node

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return Num(Fraction(t.text), t.offset)
        if t.kind == "name":
            self.take()
            return Name(t.text, t.offset)
        if t.kind == "op" and t.text == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        raise ExprSyntaxError(f"expected an operand, found {_describe(t)}", t.offset)


def _describe(t):
    return "end of input" if t.kind == "end" else repr(t.text)


def parse(src):
    """Parse src into a syntax tree."""
    p = _Parser(tokenize(src))
    node = p.expr()
    if p.tok.kind != "end":
        raise ExprSyntaxError(f"unexpected {_describe(p.tok)}", p.tok.offset)
    return node


# -- elaboration ---------------------------------------------------------------

_GENS = {"x1": 1, "x2": 2, "x3": 3}
_DIFFS = {"dx1": 1, "dx2": 2, "dx3": 3}


def _degree(v):
    return v.degree if isinstance(v, Form) else 0


def elaborate(node, ctx=DEFAULT):
    """Evaluate a syntax tree to an NcPoly (0-forms) or a Form."""
    if isinstance(node, Num):
        return NcPoly.const(ScalarPoly.const(node.value, ctx), ctx)
    if isinstance(node, Name):
        return _name(node, ctx)
    if isinstance(node, Neg):
        v = elaborate(node.operand, ctx)
        return -v
    if isinstance(node, Pow):
        v = elaborate(node.base, ctx)
        if isinstance(v, Form):
            raise ExprDegreeError("powers apply to 0-forms only", node.offset)
        return v ** node.exponent
    left = elaborate(node.left, ctx)
    right = elaborate(node.right, ctx)
    if node.op in "+-":
        if _degree(left) != _degree(right) and left and right:
            raise ExprDegreeError(
                f"cannot add forms of degree {_degree(left)} and {_degree(right)}", node.offset)
        if isinstance(left, Form) or isinstance(right, Form):
            deg = max(_degree(left), _degree(right))
            left, right = _lift(left, deg, ctx), _lift(right, deg, ctx)
        return left + right if node.op == "+" else left - right
    if node.op == "*":
        if isinstance(left, Form) and isinstance(right, Form):
            raise ExprDegreeError("use /\\ to multiply two forms", node.offset)
        return left * right
    # wedge
    if _degree(left) == 0 or _degree(right) == 0:
        raise ExprDegreeError("wedge needs forms of degree >= 1 on both sides", node.offset)
    if _degree(left) + _degree(right) > 3:
        raise ExprDegreeError("wedge product exceeds degree 3", node.offset)
    return wedge(left, right)


def _lift(v, deg, ctx):
    if isinstance(v, Form):
        return v
    return Form.zero(deg, ctx) if not v else v


def _name(node, ctx):
    n = node.id
    if n in _GENS:
        return NcPoly.gen(_GENS[n], ctx)
    if n in _DIFFS:
        return dx(_DIFFS[n], ctx)
    if n == "i":
        return NcPoly.const(ScalarPoly.const(GaussianRational(0, 1), ctx), ctx)
    if n in ctx.names:
        return NcPoly.const(ScalarPoly.var(n, ctx), ctx)
    raise ExprSyntaxError(f"unknown identifier {n!r}", node.offset)


def parse_value(src, ctx=DEFAULT):
    """Parse and elaborate in one step."""
    return elaborate(parse(src), ctx)
