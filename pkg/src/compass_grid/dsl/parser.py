"""Recursive-descent parser for construction scripts.

Grammar::

    program   := { statement }
    statement := "point" IDENT "=" pexpr
               | "point" IDENT "," IDENT "=" "intersect" "(" IDENT "," IDENT ")"
               | "line" IDENT "=" lexpr
               | "circle" IDENT "=" cexpr
               | "grid" "(" number "," number "," number ")"
               | "role" "(" IDENT "," ("lattice" | "figure" | "auxiliary") ")"
    pexpr     := "(" number "," number ")"
               | "intersect" "(" IDENT "," IDENT ")" "[" ("0" | "1") "]"
               | "midpoint" "(" IDENT "," IDENT ")"
               | "transfer" "(" IDENT "," IDENT "," IDENT "," IDENT "," ("forward" | "backward") ")"
    lexpr     := "line" "(" IDENT "," IDENT ")"
               | "perp" "(" IDENT "," IDENT ")"
               | "copy_angle" "(" IDENT "," IDENT "," IDENT "," IDENT "," IDENT "," ("left" | "right") [","] ")"
    cexpr     := "circle" "(" IDENT "," IDENT ")"
    number    := ["+" | "-"] INT ["/" INT]

``transfer(p, q, along, from, dir)`` marks |pq| on ``along`` from ``from``;
``copy_angle(a1, v, a2, l, t, side)`` copies angle a1-v-a2 to point t on l.
Side words and role names are contextual, not reserved.  ``#`` starts a
comment.  After a syntax error the parser skips to the next statement start
and keeps going; it gives up after ``MAX_ERRORS`` diagnostics.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction

from . import ast
from .ast import Ref, Span
from .diagnostics import (
    INVALID,
    KIND,
    REDEFINITION,
    SYNTAX,
    UNDEFINED,
    Diagnostic,
    DiagnosticError,
)
from .lexer import SourceMap, Token, tokenize

MAX_ERRORS = 50
MAX_INT_DIGITS = 1000
MAX_GRID = 100

SIDES = ("left", "right")
DIRECTIONS = ("forward", "backward")
ROLES = ("lattice", "figure", "auxiliary")


class _Sync(Exception):
    pass


class _Abort(Exception):
    pass


class Parser:
    def __init__(self, source: str):
        self.map = SourceMap(source)
        self.tokens = tokenize(source)
        self.buf: deque[Token] = deque()
        self.diagnostics: list[Diagnostic] = []

    # token stream

    def peek(self, k: int = 0) -> Token:
        while len(self.buf) <= k:
            tok = next(self.tokens, None)
            if tok is None:
                tok = self.buf[-1] if self.buf else Token("eof", "", 0)
            self.buf.append(tok)
        return self.buf[k]

    def advance(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.buf.popleft()
        return tok

    def span(self, tok: Token) -> Span:
        return self.map.span(tok.offset)

    def error(self, tok: Token, message: str, code: str = SYNTAX):
        self.diagnostics.append(Diagnostic("error", self.span(tok), code, message))
        if len(self.diagnostics) >= MAX_ERRORS:
            raise _Abort

    def fail(self, tok: Token, expected: str):
        found = "end of input" if tok.kind == "eof" else repr(tok.text[:20])
        self.error(tok, f"expected {expected}, found {found}")
        raise _Sync

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(tok, what or repr(kind))
        return self.advance()

    def keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok.kind != "keyword" or tok.text != word:
            self.fail(tok, repr(word))
        return self.advance()

    def ident(self) -> Ref:
        tok = self.peek()
        if tok.kind != "ident":
            self.fail(tok, "identifier")
        self.advance()
        return Ref(tok.text, self.span(tok))

    def word(self, choices: tuple[str, ...]) -> str:
        tok = self.peek()
        if tok.kind != "ident" or tok.text not in choices:
            self.fail(tok, " or ".join(repr(c) for c in choices))
        self.advance()
        return tok.text

    def integer(self) -> int:
        tok = self.expect("int", "integer")
        if len(tok.text) > MAX_INT_DIGITS:
            self.error(tok, "integer literal too long")
            raise _Sync
        return int(tok.text)

    def number(self) -> Fraction:
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        num = self.integer()
        den = 1
        if self.peek().kind == "/":
            self.advance()
            tok = self.peek()
            den = self.integer()
            if den == 0:
                self.error(tok, "zero denominator")
                raise _Sync
        return sign * Fraction(num, den)

    def args(self, n: int) -> list[Ref]:
        self.expect("(")
        refs = [self.ident()]
        for _ in range(n - 1):
            self.expect(",")
            refs.append(self.ident())
        self.expect(")")
        return refs

    # grammar

    def at_statement_start(self) -> bool:
        tok = self.peek()
        if tok.kind != "keyword":
            return False
        nxt = self.peek(1).kind
        if tok.text in ("point", "line", "circle"):
            return nxt == "ident"
        if tok.text in ("grid", "role"):
            return nxt == "("
        return False

    def parse_program(self) -> list:
        statements = []
        try:
            while self.peek().kind != "eof":
                try:
                    statements.append(self.statement())
                except _Sync:
                    self.recover()
        except _Abort:
            pass
        return statements

    def recover(self):
        while self.peek().kind != "eof" and not self.at_statement_start():
            self.advance()

    def statement(self):
        tok = self.peek()
        span = self.span(tok)
        if tok.kind == "keyword":
            if tok.text == "point":
                return self.point_stmt(span)
            if tok.text in ("line", "circle"):
                self.advance()
                name = self.ident()
                self.expect("=")
                expr = self.lexpr() if tok.text == "line" else self.cexpr()
                return ast.Decl(tok.text, name, expr, span)
            if tok.text == "grid":
                self.advance()
                self.expect("(")
                rows = self.number()
                self.expect(",")
                cols = self.number()
                self.expect(",")
                ratio = self.number()
                self.expect(")")
                return ast.Grid(rows, cols, ratio, span)
            if tok.text == "role":
                self.advance()
                self.expect("(")
                target = self.ident()
                self.expect(",")
                role = self.word(ROLES)
                self.expect(")")
                return ast.Role(target, role, span)
        self.advance()
        self.error(tok, f"expected a statement, found {tok.text[:20]!r}" if tok.text else "expected a statement")
        raise _Sync

    def point_stmt(self, span: Span):
        self.advance()
        name = self.ident()
        if self.peek().kind == ",":
            self.advance()
            second = self.ident()
            self.expect("=")
            self.keyword("intersect")
            a, b = self.args(2)
            return ast.IntersectPair(name, second, a, b, span)
        self.expect("=")
        return ast.Decl("point", name, self.pexpr(), span)

    def pexpr(self):
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            x = self.number()
            self.expect(",")
            y = self.number()
            self.expect(")")
            return ast.PointLiteral(x, y)
        if tok.kind == "keyword":
            if tok.text == "intersect":
                self.advance()
                a, b = self.args(2)
                self.expect("[")
                btok = self.peek()
                branch = self.integer()
                if branch not in (0, 1):
                    self.error(btok, "intersection branch must be 0 or 1")
                    raise _Sync
                self.expect("]")
                return ast.Intersect(a, b, branch)
            if tok.text == "midpoint":
                self.advance()
                return ast.Midpoint(*self.args(2))
            if tok.text == "transfer":
                self.advance()
                self.expect("(")
                refs = [self.ident()]
                for _ in range(3):
                    self.expect(",")
                    refs.append(self.ident())
                self.expect(",")
                direction = self.word(DIRECTIONS)
                self.expect(")")
                return ast.Transfer(*refs, direction)
        self.fail(tok, "point expression")

    def lexpr(self):
        tok = self.peek()
        if tok.kind == "keyword":
            if tok.text == "line":
                self.advance()
                return ast.LineThrough(*self.args(2))
            if tok.text == "perp":
                self.advance()
                return ast.Perp(*self.args(2))
            if tok.text == "copy_angle":
                self.advance()
                self.expect("(")
                refs = [self.ident()]
                for _ in range(4):
                    self.expect(",")
                    refs.append(self.ident())
                self.expect(",")
                side = self.word(SIDES)
                if self.peek().kind == ",":
                    self.advance()
                self.expect(")")
                return ast.CopyAngle(*refs, side)
        self.fail(tok, "line expression")

    def cexpr(self):
        self.keyword("circle")
        return ast.CircleThrough(*self.args(2))


# name resolution

_SIGNATURES = {
    ast.Intersect: (("line", "circle"), ("line", "circle")),
    ast.Midpoint: (("point",), ("point",)),
    ast.Transfer: (("point",), ("point",), ("line",), ("point",)),
    ast.LineThrough: (("point",), ("point",)),
    ast.Perp: (("line",), ("point",)),
    ast.CopyAngle: (("point",), ("point",), ("point",), ("line",), ("point",)),
    ast.CircleThrough: (("point",), ("point",)),
}


def _refs(node) -> list[Ref]:
    return [v for v in vars(node).values() if isinstance(v, Ref)]


def grid_names(rows: int, cols: int) -> list[tuple[str, str]]:
    return (
        [(f"h{i}", "line") for i in range(rows)]
        + [(f"v{j}", "line") for j in range(cols)]
        + [(f"c{i}_{j}", "circle") for i in range(rows) for j in range(cols)]
    )


def _resolve(statements, diagnostics: list[Diagnostic]):
    kinds: dict[str, str] = {}

    def err(span, code, msg):
        diagnostics.append(Diagnostic("error", span, code, msg))
        if len(diagnostics) >= MAX_ERRORS:
            raise _Abort

    def use(ref: Ref, allowed: tuple[str, ...]):
        kind = kinds.get(ref.name)
        if kind is None:
            err(ref.span, UNDEFINED, f"{ref.name!r} is not defined")
        elif kind not in allowed:
            err(ref.span, KIND, f"{ref.name!r} is a {kind}, expected {' or '.join(allowed)}")

    def define(ref: Ref, kind: str, span: Span | None = None):
        if ref.name in kinds:
            err(span or ref.span, REDEFINITION, f"{ref.name!r} is already defined")
        else:
            kinds[ref.name] = kind

    for st in statements:
        if isinstance(st, ast.Decl):
            sig = _SIGNATURES.get(type(st.expr), ())
            for ref, allowed in zip(_refs(st.expr), sig):
                use(ref, allowed)
            define(st.name, st.kind)
        elif isinstance(st, ast.IntersectPair):
            use(st.a, ("line", "circle"))
            use(st.b, ("line", "circle"))
            define(st.first, "point")
            define(st.second, "point")
        elif isinstance(st, ast.Grid):
            dims = (st.rows, st.cols)
            ok = True
            if any(d.denominator != 1 or d < 1 for d in dims):
                err(st.span, INVALID, "grid rows and columns must be positive integers")
                ok = False
            elif any(d > MAX_GRID for d in dims):
                err(st.span, INVALID, f"grid dimensions are limited to {MAX_GRID}")
                ok = False
            if st.ratio <= 0:
                err(st.span, INVALID, "grid ratio must be positive")
                ok = False
            if ok:
                for name, kind in grid_names(int(st.rows), int(st.cols)):
                    define(Ref(name, st.span), kind)
        elif isinstance(st, ast.Role):
            if st.target.name not in kinds:
                err(st.target.span, UNDEFINED, f"{st.target.name!r} is not defined")


def _parse(source: str | bytes) -> tuple[list, list[Diagnostic]]:
    if isinstance(source, bytes):
        source = source.decode("utf-8", errors="replace")
    parser = Parser(source)
    statements = parser.parse_program()
    diagnostics = parser.diagnostics
    if len(diagnostics) < MAX_ERRORS:
        try:
            _resolve(statements, diagnostics)
        except _Abort:
            pass
    return statements, diagnostics


def check(source: str | bytes) -> list[Diagnostic]:
    """All diagnostics for ``source`` (empty when it parses cleanly)."""
    return _parse(source)[1]


def parse(source: str | bytes) -> ast.Program:
    """Parse a construction script; raises DiagnosticError listing every problem found."""
    statements, diagnostics = _parse(source)
    if diagnostics:
        raise DiagnosticError(diagnostics)
    return ast.Program(tuple(statements))
