from __future__ import annotations

from fractions import Fraction

from . import ast


def _num(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _call(name: str, *args: str) -> str:
    return f"{name}({', '.join(args)})"


def _expr(e) -> str:
    if isinstance(e, ast.PointLiteral):
        return f"({_num(e.x)}, {_num(e.y)})"
    if isinstance(e, ast.Intersect):
        return _call("intersect", e.a.name, e.b.name) + f"[{e.branch}]"
    if isinstance(e, ast.Midpoint):
        return _call("midpoint", e.p.name, e.q.name)
    if isinstance(e, ast.Transfer):
        return _call("transfer", e.p.name, e.q.name, e.along.name, e.origin.name, e.direction)
    if isinstance(e, ast.LineThrough):
        return _call("line", e.p.name, e.q.name)
    if isinstance(e, ast.Perp):
        return _call("perp", e.line.name, e.point.name)
    if isinstance(e, ast.CopyAngle):
        return _call("copy_angle", e.arm1.name, e.vertex.name, e.arm2.name, e.line.name, e.at.name, e.side)
    if isinstance(e, ast.CircleThrough):
        return _call("circle", e.center.name, e.through.name)
    raise TypeError(f"not an expression: {e!r}")


def format_statement(st) -> str:
    if isinstance(st, ast.Decl):
        return f"{st.kind} {st.name.name} = {_expr(st.expr)}"
    if isinstance(st, ast.IntersectPair):
        return f"point {st.first.name}, {st.second.name} = {_call('intersect', st.a.name, st.b.name)}"
    if isinstance(st, ast.Grid):
        return _call("grid", _num(st.rows), _num(st.cols), _num(st.ratio))
    if isinstance(st, ast.Role):
        return _call("role", st.target.name, st.role)
    raise TypeError(f"not a statement: {st!r}")


def format_program(program: ast.Program) -> str:
    """Canonical source: one statement per line, comments dropped."""
    return "".join(format_statement(st) + "\n" for st in program.statements)
