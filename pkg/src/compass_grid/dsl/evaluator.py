from __future__ import annotations

from ..constructions import copy_angle_ids, midpoint, perpendicular, transfer
from ..exact import ConstructibleError
from ..grid import GridSpec, generate_grid
from ..kernel import (
    Construction,
    ConstructionTrace,
    GeometryError,
    NoSuchIntersection,
    Point,
    Scene,
)
from . import ast
from .diagnostics import DEGENERATE, NO_INTERSECTION, Diagnostic, DiagnosticError


def _declare(con: Construction, name: str, e) -> None:
    if isinstance(e, ast.PointLiteral):
        con.seed(Point(e.x, e.y), name)
    elif isinstance(e, ast.Intersect):
        con.intersect(e.a.name, e.b.name, e.branch, name=name)
    elif isinstance(e, ast.Midpoint):
        midpoint(con, e.p.name, e.q.name, name=name)
    elif isinstance(e, ast.Transfer):
        transfer(con, e.p.name, e.q.name, e.along.name, e.origin.name, e.direction, name=name)
    elif isinstance(e, ast.LineThrough):
        con.line(e.p.name, e.q.name, name=name)
    elif isinstance(e, ast.Perp):
        perpendicular(con, e.line.name, e.point.name, name=name)
    elif isinstance(e, ast.CopyAngle):
        copy_angle_ids(con, e.arm1.name, e.vertex.name, e.arm2.name, e.line.name, e.at.name,
                       e.side, name=name)
    elif isinstance(e, ast.CircleThrough):
        con.circle(e.center.name, e.through.name, name=name)
    else:
        raise TypeError(f"unknown expression {e!r}")


def _execute(con: Construction, scene: Scene, st) -> None:
    if isinstance(st, ast.Decl):
        _declare(con, st.name.name, st.expr)
        scene.add(st.name.name, con[st.name.name])
    elif isinstance(st, ast.IntersectPair):
        pts = con.intersections(st.a.name, st.b.name)
        for branch, ref in enumerate((st.first, st.second)):
            con.intersect(st.a.name, st.b.name, branch, name=ref.name, points=pts)
            scene.add(ref.name, con[ref.name])
    elif isinstance(st, ast.Grid):
        spec = GridSpec(int(st.rows), int(st.cols), 1, st.ratio)
        grid_scene, _ = generate_grid(Point(0, 0), Point(1, 0), spec, construction=con)
        for obj in grid_scene:
            scene.add(obj.id, obj.geometry, obj.role)
    elif isinstance(st, ast.Role):
        scene.set_role(st.target.name, st.role)
    else:
        raise TypeError(f"unknown statement {st!r}")


def evaluate(program: ast.Program) -> tuple[Scene, ConstructionTrace]:
    """Run a parsed program; geometric failures become a DiagnosticError.

    Evaluation stops at the first failing statement, since later statements
    usually depend on the object it failed to produce.
    """
    con = Construction()
    scene = Scene()
    for st in program.statements:
        try:
            _execute(con, scene, st)
        except NoSuchIntersection as exc:
            raise DiagnosticError([Diagnostic("error", st.span, NO_INTERSECTION, str(exc))]) from None
        except (GeometryError, ConstructibleError, ValueError) as exc:
            raise DiagnosticError([Diagnostic("error", st.span, DEGENERATE, str(exc))]) from None
    return scene, con.trace
