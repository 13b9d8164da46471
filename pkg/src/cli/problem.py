# src/cli/problem.py
"""
Problem-file parser.

    # comment
    ring Q[x,y] order=grevlex          (also GF(p)[...], Z/p[...], order=lex|block(k))
    rel = x^4+y^4
    ideal I = x^2, x*y^4, y^5
    matrix M = [[0, x], [-x, 0]]

One statement per line. Polynomials use integers, rationals a/b, + - * ^ and
parentheses; multiplication must be written with an explicit '*'.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction

from src.core.errors import AlgebraError, DegenerateInputError, ProblemParseError
from src.core.matrix import PolyMatrix
from src.core.polynomial import Polynomial
from src.core.ring import MonomialOrder, RingDescriptor
from src.ideals.handle import IdealHandle

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[-+*^/()\[\],=]))")


@dataclass(frozen=True)
class Token:
    kind: str  # num | ident | sym | end
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, column_offset: int = 0) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            col = pos + 1 + len(text[pos:]) - len(text[pos:].lstrip())
            raise ProblemParseError(f"unexpected character {text[col - 1]!r}", line, col + column_offset)
        kind = match.lastgroup
        start = match.start(kind) + 1 + column_offset
        tokens.append(Token(kind, match.group(kind), line, start))
        pos = match.end()
    tokens.append(Token("end", "", line, len(text) + 1 + column_offset))
    return tokens


class _Parser:
    """Recursive descent over one line of tokens."""

    def __init__(self, tokens: list[Token], ring: RingDescriptor | None = None):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    # --- 基础 ---
    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> ProblemParseError:
        tok = tok or self.current
        return ProblemParseError(message, tok.line, tok.column)

    def expect(self, text: str) -> Token:
        tok = self.current
        if tok.text != text or tok.kind == "end":
            raise self.error(f"expected '{text}', found {self._describe(tok)}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        tok = self.current
        if tok.kind != kind:
            raise self.error(f"expected {what}, found {self._describe(tok)}")
        return self.advance()

    def at(self, text: str) -> bool:
        return self.current.kind == "sym" and self.current.text == text

    def expect_end(self) -> None:
        if self.current.kind != "end":
            raise self.error(f"unexpected {self._describe(self.current)}")

    @staticmethod
    def _describe(tok: Token) -> str:
        return "end of line" if tok.kind == "end" else f"'{tok.text}'"

    # --- 多项式 ---
    def polynomial(self) -> Polynomial:
        value = self.expression()
        tok = self.current
        if tok.kind in ("num", "ident") or (tok.kind == "sym" and tok.text == "("):
            raise self.error("juxtaposition is not allowed, write '*' explicitly", tok)
        return value

    def expression(self) -> Polynomial:
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.unary()
        while self.at("*") or self.at("/"):
            op_tok = self.advance()
            rhs = self.unary()
            if op_tok.text == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    raise self.error("division is only allowed by a nonzero constant", op_tok)
                value = value.scale(1 / rhs.lc)
        return value

    def unary(self) -> Polynomial:
        if self.at("-"):
            self.advance()
            return -self.unary()
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.at("^"):
            self.advance()
            exp_tok = self.expect_kind("num", "an integer exponent")
            return base ** int(exp_tok.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.current
        if tok.kind == "num":
            self.advance()
            return Polynomial.constant(self.ring, Fraction(int(tok.text)))
        if tok.kind == "ident":
            self.advance()
            if tok.text not in self.ring.variables:
                raise self.error(f"unknown variable '{tok.text}'", tok)
            return Polynomial.variable(self.ring, tok.text)
        if self.at("("):
            self.advance()
            value = self.expression()
            self.expect(")")
            return value
        raise self.error(f"expected a polynomial, found {self._describe(tok)}")

    def polynomial_list(self, closers: tuple[str, ...] = ()) -> list[Polynomial]:
        items = [self.polynomial()]
        while self.at(","):
            self.advance()
            items.append(self.polynomial())
        if self.current.kind != "end" and not any(self.at(c) for c in closers):
            raise self.error(f"unexpected {self._describe(self.current)}")
        return items

    # --- 语句 ---
    def ring_header(self) -> RingDescriptor:
        self.expect("ring")
        field_tok = self.expect_kind("ident", "a coefficient field (Q, GF(p) or Z/p)")
        characteristic = 0
        if field_tok.text == "GF":
            self.expect("(")
            characteristic = int(self.expect_kind("num", "a prime").text)
            self.expect(")")
        elif field_tok.text == "Z":
            self.expect("/")
            characteristic = int(self.expect_kind("num", "a prime").text)
        elif field_tok.text != "Q":
            raise self.error(f"unknown coefficient field '{field_tok.text}'", field_tok)
        self.expect("[")
        names = [self.expect_kind("ident", "a variable name").text]
        while self.at(","):
            self.advance()
            names.append(self.expect_kind("ident", "a variable name").text)
        self.expect("]")
        order = MonomialOrder()
        if self.current.kind == "ident" and self.current.text == "order":
            self.advance()
            self.expect("=")
            order_tok = self.expect_kind("ident", "grevlex, lex or block(k)")
            if order_tok.text == "block":
                self.expect("(")
                size = int(self.expect_kind("num", "a block size").text)
                self.expect(")")
                order = MonomialOrder("block", size)
            elif order_tok.text in ("grevlex", "lex"):
                order = MonomialOrder(order_tok.text)
            else:
                raise self.error(f"unknown monomial order '{order_tok.text}'", order_tok)
        self.expect_end()
        try:
            return RingDescriptor(tuple(names), characteristic, order)
        except AlgebraError as e:
            raise self.error(str(e), field_tok) from e

    def matrix_body(self) -> list[list[Polynomial]]:
        self.expect("[")
        rows = [self.matrix_row()]
        while self.at(","):
            self.advance()
            rows.append(self.matrix_row())
        self.expect("]")
        self.expect_end()
        return rows

    def matrix_row(self) -> list[Polynomial]:
        self.expect("[")
        row = self.polynomial_list(closers=("]",))
        self.expect("]")
        return row


@dataclass(frozen=True)
class ProblemFile:
    """A ring (possibly with relations) plus named ideals and matrices."""

    ring: RingDescriptor
    ideals: dict[str, IdealHandle] = field(default_factory=dict)
    matrices: dict[str, PolyMatrix] = field(default_factory=dict)

    def ideal(self, name: str) -> IdealHandle:
        if name not in self.ideals:
            raise DegenerateInputError(f"no ideal named '{name}' in the problem file")
        return self.ideals[name]

    def matrix(self, name: str) -> PolyMatrix:
        if name not in self.matrices:
            raise DegenerateInputError(f"no matrix named '{name}' in the problem file")
        return self.matrices[name]

    def polynomial(self, text: str) -> Polynomial:
        """Parse a polynomial given on the command line (positions refer to that text)."""
        return parse_polynomial(text, self.ring)


def parse_polynomial(text: str, ring: RingDescriptor) -> Polynomial:
    parser = _Parser(tokenize(text, line=1), ring.base)
    value = parser.polynomial()
    parser.expect_end()
    return value


def parse(text: str) -> ProblemFile:
    ring: RingDescriptor | None = None
    relations_seen = False
    named: dict[str, tuple[str, object]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = tokenize(line, lineno)
        head = tokens[0]
        if head.kind != "ident" or head.text not in ("ring", "rel", "ideal", "matrix"):
            raise ProblemParseError(f"expected 'ring', 'rel', 'ideal' or 'matrix', found '{head.text}'",
                                    head.line, head.column)
        if head.text == "ring":
            if ring is not None:
                raise ProblemParseError("duplicate ring declaration", head.line, head.column)
            ring = _Parser(tokens).ring_header()
            continue
        if ring is None:
            raise ProblemParseError("the ring must be declared first", head.line, head.column)

        parser = _Parser(tokens, ring.base)
        parser.advance()
        if head.text == "rel":
            if relations_seen:
                raise ProblemParseError("duplicate rel declaration", head.line, head.column)
            if named:
                raise ProblemParseError("rel must come before ideals and matrices", head.line, head.column)
            parser.expect("=")
            rels = parser.polynomial_list()
            ring = ring.with_relations([r for r in rels if r])
            relations_seen = True
            continue

        name_tok = parser.expect_kind("ident", "a name")
        if name_tok.text in named:
            raise ProblemParseError(f"duplicate name '{name_tok.text}'", name_tok.line, name_tok.column)
        eq_tok = parser.expect("=")
        if head.text == "ideal":
            if parser.current.kind == "end":
                raise ProblemParseError("empty ideal body", eq_tok.line, eq_tok.column + 1)
            named[name_tok.text] = ("ideal", parser.polynomial_list())
        else:
            rows = parser.matrix_body()
            if any(len(r) != len(rows[0]) for r in rows):
                raise ProblemParseError("matrix rows have different lengths", name_tok.line, name_tok.column)
            named[name_tok.text] = ("matrix", rows)

    if ring is None:
        raise ProblemParseError("no ring declaration found", 1, 1)
    ideals = {n: IdealHandle(ring, v) for n, (kind, v) in named.items() if kind == "ideal"}
    matrices = {n: PolyMatrix.from_rows(ring, v) for n, (kind, v) in named.items() if kind == "matrix"}
    logger.debug(f"parsed problem over {ring}: ideals {list(ideals)}, matrices {list(matrices)}")
    return ProblemFile(ring=ring, ideals=ideals, matrices=matrices)


def parse_file(path: str) -> ProblemFile:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ProblemParseError(f"cannot read problem file '{path}': {e}") from e
    except UnicodeDecodeError as e:
        raise ProblemParseError(f"problem file '{path}' is not valid UTF-8: {e.reason} at byte {e.start}") from e
    return parse(text)
