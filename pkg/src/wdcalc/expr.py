"""Expression language for products of segments.

Grammar::

    expr := term ('x' term)*
    term := 'St' '(' int ',' ref ')'
          | 'seg' '(' ref ',' rat ',' rat ')'
          | 'twist' '(' expr ',' rat ')'
          | ref
    rat  := ['-'] int ['/' '2']

``x``, ``St``, ``seg`` and ``twist`` are reserved.  Offsets in errors are
byte offsets into the UTF-8 input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cuspidal import RESERVED
from .errors import DomainError, ParseError
from .halfint import format_rational
from .segments import Segment, steinberg_segment


@dataclass(frozen=True)
class CuspidalRef:
    name: str


@dataclass(frozen=True)
class St:
    k: int
    rho: CuspidalRef


@dataclass(frozen=True)
class Seg:
    rho: CuspidalRef
    a: Fraction
    b: Fraction


@dataclass(frozen=True)
class Product:
    items: tuple


@dataclass(frozen=True)
class Twist:
    expr: object
    u: Fraction


Expr = Union[CuspidalRef, St, Seg, Product, Twist]

_TOKEN = re.compile(
    r"\s*(?:(?P<int>[0-9]+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),/\-]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'ident', 'kw', a punctuation character, or 'eof'
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    byte_at = _byte_offsets(text)
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip() == "":
                tokens.append(Token("eof", "", byte_at(len(text))))
                return tokens
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", byte_at(bad))
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "ident" and value in RESERVED:
            kind = "kw"
        elif kind == "punct":
            kind = value
        tokens.append(Token(kind, value, byte_at(start)))
        pos = m.end()


def _byte_offsets(text: str):
    if text.isascii():
        return lambda i: i
    return lambda i: len(text[:i].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, *expected):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"unexpected {found}", t.offset, expected)

    def take(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            self.fail(repr(text or kind) if text or len(kind) == 1 else kind)
        self.i += 1
        return t

    def at_kw(self, word: str) -> bool:
        return self.tok.kind == "kw" and self.tok.text == word

    def expr(self):
        items = [self.term()]
        while self.at_kw("x"):
            self.i += 1
            items.append(self.term())
        return items[0] if len(items) == 1 else Product(tuple(items))

    def term(self):
        t = self.tok
        if t.kind == "ident":
            self.i += 1
            return CuspidalRef(t.text)
        if self.at_kw("St"):
            self.i += 1
            self.take("(")
            k = int(self.take("int").text)
            self.take(",")
            rho = self.ref()
            self.take(")")
            return St(k, rho)
        if self.at_kw("seg"):
            self.i += 1
            self.take("(")
            rho = self.ref()
            self.take(",")
            a = self.rat()
            self.take(",")
            b = self.rat()
            self.take(")")
            return Seg(rho, a, b)
        if self.at_kw("twist"):
            self.i += 1
            self.take("(")
            inner = self.expr()
            self.take(",")
            u = self.rat()
            self.take(")")
            return Twist(inner, u)
        self.fail("'St'", "'seg'", "'twist'", "identifier")

    def ref(self) -> CuspidalRef:
        return CuspidalRef(self.take("ident").text)

    def rat(self) -> Fraction:
        sign = 1
        if self.tok.kind == "-":
            self.i += 1
            sign = -1
        num = int(self.take("int").text)
        if self.tok.kind == "/":
            self.i += 1
            den = self.tok
            if den.kind != "int" or int(den.text) != 2:
                self.fail("'2' (twists and endpoints are half-integers)")
            self.i += 1
            return Fraction(sign * num, 2)
        return Fraction(sign * num)


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    if p.tok.kind != "eof":
        p.fail("'x'", "end of input")
    return e


def print_expr(e: Expr) -> str:
    if isinstance(e, CuspidalRef):
        return e.name
    if isinstance(e, St):
        return f"St({e.k}, {e.rho.name})"
    if isinstance(e, Seg):
        return f"seg({e.rho.name}, {format_rational(e.a)}, {format_rational(e.b)})"
    if isinstance(e, Twist):
        return f"twist({print_expr(e.expr)}, {format_rational(e.u)})"
    if isinstance(e, Product):
        return " x ".join(print_expr(item) for item in e.items)
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(e: Expr, catalog) -> tuple[Segment, ...]:
    """The list of segments the expression denotes, in written order."""
    if isinstance(e, CuspidalRef):
        return (steinberg_segment(catalog.lookup(e.name), 1),)
    if isinstance(e, St):
        if e.k < 1:
            raise DomainError(f"St(k, ...) needs k >= 1, got {e.k}")
        return (steinberg_segment(catalog.lookup(e.rho.name), e.k),)
    if isinstance(e, Seg):
        return (Segment(catalog.lookup(e.rho.name), e.a, e.b),)
    if isinstance(e, Twist):
        return tuple(s.twisted(e.u) for s in evaluate(e.expr, catalog))
    if isinstance(e, Product):
        return tuple(s for item in e.items for s in evaluate(item, catalog))
    raise TypeError(f"not an expression node: {e!r}")
