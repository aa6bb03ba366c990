"""Syntax tree for construction scripts.

Source spans are carried on every node but excluded from equality, so two
programs compare equal exactly when they are structurally identical.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union


@dataclass(frozen=True)
class Span:
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


NOWHERE = Span(0, 0)


def _span():
    return field(default=NOWHERE, compare=False, repr=False)


@dataclass(frozen=True)
class Ref:
    name: str
    span: Span = _span()


# point expressions


@dataclass(frozen=True)
class PointLiteral:
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class Intersect:
    a: Ref
    b: Ref
    branch: int


@dataclass(frozen=True)
class Midpoint:
    p: Ref
    q: Ref


@dataclass(frozen=True)
class Transfer:
    p: Ref
    q: Ref
    along: Ref
    origin: Ref
    direction: str


# line expressions


@dataclass(frozen=True)
class LineThrough:
    p: Ref
    q: Ref


@dataclass(frozen=True)
class Perp:
    line: Ref
    point: Ref


@dataclass(frozen=True)
class CopyAngle:
    arm1: Ref
    vertex: Ref
    arm2: Ref
    line: Ref
    at: Ref
    side: str


# circle expressions


@dataclass(frozen=True)
class CircleThrough:
    center: Ref
    through: Ref


Expr = Union[PointLiteral, Intersect, Midpoint, Transfer, LineThrough, Perp, CopyAngle, CircleThrough]


# statements


@dataclass(frozen=True)
class Decl:
    kind: str  # point | line | circle
    name: Ref
    expr: Expr
    span: Span = _span()


@dataclass(frozen=True)
class IntersectPair:
    first: Ref
    second: Ref
    a: Ref
    b: Ref
    span: Span = _span()


@dataclass(frozen=True)
class Grid:
    rows: Fraction
    cols: Fraction
    ratio: Fraction
    span: Span = _span()


@dataclass(frozen=True)
class Role:
    target: Ref
    role: str
    span: Span = _span()


Statement = Union[Decl, IntersectPair, Grid, Role]


@dataclass(frozen=True)
class Program:
    statements: tuple[Statement, ...] = ()

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        return iter(self.statements)
