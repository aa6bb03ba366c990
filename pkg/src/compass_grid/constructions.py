"""Classical construction macros built from the three kernel primitives.

Each macro has two faces: an id-level function that appends its steps to a
shared :class:`~compass_grid.kernel.Construction`, and an object-level wrapper
that starts from fresh seeds and returns ``(result, trace)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .kernel import (
    Construction,
    ConstructionTrace,
    GeometryError,
    Line,
    Point,
    cross,
    dist_sq,
    dot,
    incidence,
)

__all__ = [
    "ConstructionError",
    "DegenerateInput",
    "DegenerateAngle",
    "VertexNotOnLine",
    "Side",
    "Direction",
    "Angle",
    "bisector",
    "midpoint",
    "perpendicular",
    "translate",
    "transfer",
    "copy_angle_ids",
    "midpoint_and_bisector",
    "perpendicular_from_point",
    "transfer_distance",
    "copy_angle",
]


class ConstructionError(GeometryError):
    pass


class DegenerateInput(ConstructionError):
    pass


class DegenerateAngle(ConstructionError):
    pass


class VertexNotOnLine(ConstructionError):
    pass


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class Angle:
    """The angle arm1-vertex-arm2."""

    vertex: Point
    arm1: Point
    arm2: Point

    def __post_init__(self):
        if self.vertex == self.arm1 or self.vertex == self.arm2:
            raise DegenerateAngle("an arm point coincides with the vertex")

    def cos_sq_parts(self):
        u = self.arm1 - self.vertex
        v = self.arm2 - self.vertex
        return dot(u, v), dot(u, u), dot(v, v)

    def cosine(self):
        num, uu, vv = self.cos_sq_parts()
        return num / (uu.sqrt() * vv.sqrt())


# id-level macros


def bisector(con: Construction, p: str, q: str, name: str | None = None) -> str:
    """Perpendicular bisector of pq through the two vesica points."""
    if con[p] == con[q]:
        raise DegenerateInput("cannot bisect a segment of zero length")
    with con.macro("bisector"):
        c1 = con.circle(p, q)
        c2 = con.circle(q, p)
        pts = con.intersections(c1, c2)
        u = con.intersect(c1, c2, 0, points=pts)
        v = con.intersect(c1, c2, 1, points=pts)
        return con.line(u, v, name=name)


def midpoint(con: Construction, p: str, q: str, name: str | None = None,
             line_name: str | None = None) -> tuple[str, str]:
    """Returns (midpoint id, bisector id)."""
    with con.macro("midpoint"):
        bis = bisector(con, p, q, name=line_name)
        pq = con.line(p, q)
        return con.intersect(bis, pq, 0, name=name), bis


def perpendicular(con: Construction, line: str, p: str, name: str | None = None) -> str:
    """Line through p perpendicular to ``line``, for p on or off it.

    A circle about p through the farther defining point of the line cuts it
    in two points symmetric about the foot; their bisector is the answer.
    """
    lp, lq = con.defining[line]
    P = con[p]
    cut = lq if dist_sq(P, con[lq]) > dist_sq(P, con[lp]) else lp
    with con.macro("perp"):
        c = con.circle(p, cut)
        pts = con.intersections(line, c)
        assert len(pts) == 2, "cutting circle must meet the line twice"
        a = con.intersect(line, c, 0, points=pts)
        b = con.intersect(line, c, 1, points=pts)
        return bisector(con, a, b, name=name)


def translate(con: Construction, p: str, q: str, origin: str) -> str:
    """A point R with R - origin == q - p, via the parallelogram p, q, R, origin.

    The midpoint M of origin and q is found by bisection; R is the reflection
    of p through M, cut from line pM by the circle about M through p.
    """
    O, P, Q = con[origin], con[p], con[q]
    if O == P:
        return q
    if O == Q:
        # R = 2q - p: reflect p through q
        with con.macro("transfer"):
            lpq = con.line(p, q)
            c = con.circle(q, p)
            return con.intersect(lpq, c, 1)
    with con.macro("transfer"):
        m, _ = midpoint(con, origin, q)
        if con[m] == P:
            return p
        lpm = con.line(p, m)
        c = con.circle(m, p)
        return con.intersect(lpm, c, 1)


def transfer(con: Construction, p: str, q: str, along: str, origin: str,
             direction: Direction | str = Direction.FORWARD, name: str | None = None) -> str:
    """Mark on ``along`` the point at distance |pq| from ``origin``.

    Forward means increasing parameter along the line's p -> q direction.
    """
    direction = Direction(direction)
    if con[p] == con[q]:
        raise DegenerateInput("cannot transfer a zero length")
    if not incidence(con[origin], con[along]):
        raise VertexNotOnLine("transfer origin is not on the target line")
    with con.macro("transfer"):
        if con[origin] == con[p]:
            through = q
        elif con[origin] == con[q]:
            through = p
        else:
            through = translate(con, p, q, origin)
        c = con.circle(origin, through)
        branch = 1 if direction is Direction.FORWARD else 0
        return con.intersect(along, c, branch, name=name)


def copy_angle_ids(con: Construction, arm1: str, vertex: str, arm2: str, line: str,
                   at: str, side: Side | str = Side.LEFT, name: str | None = None) -> str:
    """Lay off angle arm1-vertex-arm2 at ``at`` on ``line`` (triangle transfer).

    The first arm of the copy is the forward ray of ``line`` from ``at``.
    """
    side = Side(side)
    V, A1, A2 = con[vertex], con[arm1], con[arm2]
    if V == A1 or V == A2:
        raise DegenerateAngle("an arm point coincides with the vertex")
    if not incidence(con[at], con[line]):
        raise VertexNotOnLine("target vertex is not on the target line")
    with con.macro("copy_angle"):
        p1 = transfer(con, vertex, arm1, line, at)
        if A1 == A2:
            return con.line(at, p1, name=name)
        q = transfer(con, vertex, arm2, line, at)
        r = transfer(con, arm1, arm2, line, p1)
        ct = con.circle(at, q)
        cp = con.circle(p1, r)
        pts = con.intersections(ct, cp)
        if not pts:
            raise ConstructionError("triangle sides do not close")
        branch = 0 if len(pts) == 1 or side is Side.LEFT else 1
        apex = con.intersect(ct, cp, branch, points=pts)
        return con.line(at, apex, name=name)


# object-level wrappers


def _seeded(*points: Point) -> tuple[Construction, list[str]]:
    con = Construction()
    return con, [con.seed(pt) for pt in points]


def _seed_line(con: Construction, line: Line) -> str:
    a, b = con.seed(line.p), con.seed(line.q)
    return con.line(a, b)


def midpoint_and_bisector(p: Point, q: Point) -> tuple[Point, Line, ConstructionTrace]:
    if p == q:
        raise DegenerateInput("coincident points have no bisector")
    con, (a, b) = _seeded(p, q)
    m, bis = midpoint(con, a, b)
    return con[m], con[bis], con.trace


def perpendicular_from_point(line: Line, p: Point) -> tuple[Line, ConstructionTrace]:
    con = Construction()
    lid = _seed_line(con, line)
    pid = con.seed(p)
    res = perpendicular(con, lid, pid)
    return con[res], con.trace


def transfer_distance(p: Point, q: Point, along: Line, origin: Point,
                      direction: Direction | str = Direction.FORWARD) -> tuple[Point, ConstructionTrace]:
    if p == q:
        raise DegenerateInput("cannot transfer a zero length")
    con = Construction()
    lid = _seed_line(con, along)
    a, b, o = con.seed(p), con.seed(q), con.seed(origin)
    res = transfer(con, a, b, lid, o, direction)
    return con[res], con.trace


def copy_angle(src: Angle, target_line: Line, target_vertex: Point,
               side: Side | str = Side.LEFT) -> tuple[Line, ConstructionTrace]:
    if not incidence(target_vertex, target_line):
        raise VertexNotOnLine("target vertex is not on the target line")
    con = Construction()
    lid = _seed_line(con, target_line)
    v, a1, a2 = con.seed(src.vertex), con.seed(src.arm1), con.seed(src.arm2)
    t = con.seed(target_vertex)
    res = copy_angle_ids(con, a1, v, a2, lid, t, side)
    return con[res], con.trace


def opens_left(line: Line, at: Point, ray_point: Point) -> int:
    """Sign of the side of ``line`` (oriented p -> q) on which ray_point lies."""
    return cross(line.direction, ray_point - at).sign()
