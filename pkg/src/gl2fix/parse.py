"""Text formats for elements, polynomials, matrices, subspaces and generator lists.

Elements and polynomials share one arithmetic grammar::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | power
    power := atom ('^' INT)?
    atom  := INT | 't' | 'x' | '(' expr ')'

Whitespace is ignored everywhere.  A matrix is ``[[a,b],[c,d]]``, a subspace
a comma-separated list of elements and a generator list a ``;``-separated
list of matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .action import Mat2
from .errors import ExprSyntaxError
from .ff import Field, make_field
from .invariant import Subspace, subspace_from_generators
from .poly import PolyFq

MAX_DEGREE = 4096
MAX_NESTING = 100

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # int | sym | op | end
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(Token("sym", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()[],;":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start, text)
            tokens.append(Token("op", ch, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over a token list.

    ``variable`` names the polynomial indeterminate (or None for pure element
    input); every other symbol must be ``t``, which is read as the field
    generator.
    """

    def __init__(self, text: str, field: Field, variable: str | None):
        self.text = text
        self.field = field
        self.variable = variable
        self.tokens = tokenize(text)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ExprSyntaxError(message, tok.pos, self.text)

    def accept(self, value: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            found = self.tok.value or "end of input"
            self.error(f"expected {value!r}, found {found!r}")

    def expect_end(self) -> None:
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.value!r}")

    def expr(self) -> PolyFq:
        acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> PolyFq:
        start = self.tok
        acc = self.unary()
        while self.accept("*"):
            rhs = self.unary()
            if acc.degree + rhs.degree > MAX_DEGREE:
                self.error(f"degree exceeds {MAX_DEGREE}", start)
            acc = acc * rhs
        return acc

    def unary(self) -> PolyFq:
        if self.accept("-"):
            self.enter()
            value = -self.unary()
            self.depth -= 1
            return value
        return self.power()

    def enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_NESTING:
            self.error(f"nesting deeper than {MAX_NESTING}")

    def power(self) -> PolyFq:
        start = self.tok
        base = self.atom()
        if not self.accept("^"):
            return base
        tok = self.tok
        if tok.kind != "int":
            self.error("exponent must be a non-negative integer literal")
        self.i += 1
        e = int(tok.value)
        if base.degree >= 1:
            if base.degree * e > MAX_DEGREE:
                self.error(f"degree exceeds {MAX_DEGREE}", start)
            return base**e
        if base.is_zero():
            return base if e else PolyFq(self.field, [1])
        return PolyFq.constant(self.field, base.leading ** e)

    def atom(self) -> PolyFq:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return PolyFq.constant(self.field, int(tok.value))
        if tok.kind == "sym":
            self.i += 1
            if self.variable is not None and tok.value == self.variable:
                return PolyFq.x(self.field)
            if tok.value == "t" and self.variable != "t":
                return PolyFq.constant(self.field, self.field.gen)
            self.error(f"unknown symbol {tok.value!r}", tok)
        if self.accept("("):
            self.enter()
            inner = self.expr()
            self.expect(")")
            self.depth -= 1
            return inner
        found = tok.value or "end of input"
        self.error(f"expected a number, symbol or '(', found {found!r}")


def _element(parser: _Parser):
    value = parser.expr()
    return parser.field.zero if value.is_zero() else value.leading


def parse_element(field: Field, text: str):
    parser = _Parser(text, field, None)
    value = _element(parser)
    parser.expect_end()
    return value


def parse_poly(field: Field, text: str) -> PolyFq:
    parser = _Parser(text, field, "x")
    value = parser.expr()
    parser.expect_end()
    return value


def _matrix(parser: _Parser) -> Mat2:
    entries = []
    parser.expect("[")
    for row in range(2):
        if row:
            parser.expect(",")
        parser.expect("[")
        entries.append(_element(parser))
        parser.expect(",")
        entries.append(_element(parser))
        parser.expect("]")
    parser.expect("]")
    return Mat2(parser.field, *entries)


def parse_matrix(field: Field, text: str) -> Mat2:
    parser = _Parser(text, field, None)
    m = _matrix(parser)
    parser.expect_end()
    return m


def parse_subspace(field: Field, text: str) -> Subspace:
    parser = _Parser(text, field, None)
    gens = [_element(parser)]
    while parser.accept(","):
        gens.append(_element(parser))
    parser.expect_end()
    return subspace_from_generators(field, gens)


def parse_generators(field: Field, text: str) -> list[Mat2]:
    parser = _Parser(text, field, None)
    mats = [_matrix(parser)]
    while parser.accept(";"):
        mats.append(_matrix(parser))
    parser.expect_end()
    return mats


def parse_modulus(p: int, text: str) -> list[int]:
    """Ascending coefficients of a polynomial in ``t`` over F_p."""
    prime = make_field(p)
    parser = _Parser(text, prime, "t")
    value = parser.expr()
    parser.expect_end()
    return [prime.element(c).index for c in value.coeffs]


_PARSERS = {
    "element": parse_element,
    "poly": parse_poly,
    "matrix": parse_matrix,
    "subspace": parse_subspace,
    "generators": parse_generators,
}


def parse_object(field: Field, kind: str, text: str):
    """Dispatch on ``element|poly|matrix|subspace|generators``."""
    try:
        parse = _PARSERS[kind]
    except KeyError:
        raise ValueError(f"unknown object kind {kind!r}") from None
    return parse(field, text)


def format_subspace(S: Subspace) -> str:
    return str(S)


def format_generators(mats) -> str:
    return ";".join(str(m) for m in mats)
