"""Exact planar geometry: points, lines, circles and their intersections.

Only three primitives exist: the line through two points, the circle about a
point through another point, and intersection of two such objects.  The
:class:`Construction` builder applies them by id and records a
:class:`ConstructionTrace` that can be replayed through this module alone.
"""
from __future__ import annotations

import contextlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Union

from .exact import Constructible

__all__ = [
    "GeometryError",
    "DegenerateLine",
    "DegenerateCircle",
    "CoincidentObjects",
    "NoSuchIntersection",
    "TraceError",
    "Point",
    "Line",
    "Circle",
    "Scene",
    "SceneObject",
    "Step",
    "ConstructionTrace",
    "Construction",
    "line_through",
    "circle_through",
    "intersect_line_line",
    "intersect_line_circle",
    "intersect_circle_circle",
    "intersect",
    "incidence",
    "dist_sq",
    "cross",
    "dot",
    "ROLES",
    "STEP_KINDS",
]


class GeometryError(ValueError):
    pass


class DegenerateLine(GeometryError):
    pass


class DegenerateCircle(GeometryError):
    pass


class CoincidentObjects(GeometryError):
    pass


class NoSuchIntersection(GeometryError):
    pass


class TraceError(ValueError):
    pass


def _num(v) -> Constructible:
    return v if isinstance(v, Constructible) else Constructible(v)


@dataclass(frozen=True)
class Point:
    x: Constructible
    y: Constructible

    def __post_init__(self):
        object.__setattr__(self, "x", _num(self.x))
        object.__setattr__(self, "y", _num(self.y))

    def __sub__(self, other: "Point") -> tuple[Constructible, Constructible]:
        return (self.x - other.x, self.y - other.y)

    def translate(self, dx, dy) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def dot(u, v) -> Constructible:
    return u[0] * v[0] + u[1] * v[1]


def cross(u, v) -> Constructible:
    return u[0] * v[1] - u[1] * v[0]


def dist_sq(p: Point, q: Point) -> Constructible:
    dx, dy = p.x - q.x, p.y - q.y
    return dx * dx + dy * dy


@dataclass(frozen=True)
class Line:
    """The line through two distinct points, kept as given."""

    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise DegenerateLine(f"line through coincident points {self.p!r}")

    @property
    def direction(self) -> tuple[Constructible, Constructible]:
        return self.q - self.p

    @cached_property
    def coeffs(self) -> tuple[Constructible, Constructible, Constructible]:
        """(a, b, c) with a*x + b*y + c = 0, scaled so the first nonzero of a, b is 1."""
        a = self.p.y - self.q.y
        b = self.q.x - self.p.x
        c = -(a * self.p.x + b * self.p.y)
        lead = a if a else b
        return (a / lead, b / lead, c / lead)

    def parameter(self, pt: Point) -> Constructible:
        """Signed t with pt = p + t*(q - p), for pt on the line."""
        d = self.direction
        return dot(pt - self.p, d) / dot(d, d)

    def same_as(self, other: "Line") -> bool:
        return all(u == v for u, v in zip(self.coeffs, other.coeffs))


@dataclass(frozen=True)
class Circle:
    """Circle about ``center`` passing through ``through``."""

    center: Point
    through: Point

    def __post_init__(self):
        if self.center == self.through:
            raise DegenerateCircle(f"zero-radius circle at {self.center!r}")

    @cached_property
    def radius_sq(self) -> Constructible:
        return dist_sq(self.center, self.through)

    def same_as(self, other: "Circle") -> bool:
        return self.center == other.center and self.radius_sq == other.radius_sq


Curve = Union[Line, Circle]


def line_through(p: Point, q: Point) -> Line:
    return Line(p, q)


def circle_through(center: Point, through: Point) -> Circle:
    return Circle(center, through)


def incidence(p: Point, obj: Curve) -> bool:
    if isinstance(obj, Line):
        a, b, c = obj.coeffs
        return not (a * p.x + b * p.y + c)
    return dist_sq(p, obj.center) == obj.radius_sq


def intersect_line_line(l: Line, m: Line) -> Point | None:
    """The common point, or None for distinct parallels."""
    a1, b1, c1 = l.coeffs
    a2, b2, c2 = m.coeffs
    det = a1 * b2 - a2 * b1
    if not det:
        if l.same_as(m):
            raise CoincidentObjects("the two lines coincide")
        return None
    return Point((b1 * c2 - b2 * c1) / det, (a2 * c1 - a1 * c2) / det)


def intersect_line_circle(l: Line, c: Circle) -> list[Point]:
    """Common points ordered by their parameter along l.p -> l.q."""
    d = l.direction
    w = l.p - c.center
    A = dot(d, d)
    B = dot(d, w)  # half the linear coefficient
    C = dot(w, w) - c.radius_sq
    disc = B * B - A * C
    s = disc.sign()
    if s < 0:
        return []
    if s == 0:
        t = -B / A
        return [l.p.translate(t * d[0], t * d[1])]
    root = disc.sqrt()
    out = []
    for t in ((-B - root) / A, (-B + root) / A):
        out.append(l.p.translate(t * d[0], t * d[1]))
    return out


def intersect_circle_circle(c1: Circle, c2: Circle) -> list[Point]:
    """Common points; with two, the first lies left of c1.center -> c2.center."""
    d = c2.center - c1.center
    D = dot(d, d)
    r1, r2 = c1.radius_sq, c2.radius_sq
    if not D:
        if r1 == r2:
            raise CoincidentObjects("the two circles coincide")
        return []
    a = (D + r1 - r2) / (2 * D)
    base = c1.center.translate(a * d[0], a * d[1])
    h = r1 / D - a * a  # (offset / |d|)^2
    s = h.sign()
    if s < 0:
        return []
    if s == 0:
        return [base]
    k = h.sqrt()
    return [base.translate(-k * d[1], k * d[0]), base.translate(k * d[1], -k * d[0])]


def intersect(a: Curve, b: Curve) -> list[Point]:
    """Dispatch on object kinds; line-line yields at most one point."""
    if isinstance(a, Line) and isinstance(b, Line):
        p = intersect_line_line(a, b)
        return [] if p is None else [p]
    if isinstance(a, Line):
        return intersect_line_circle(a, b)
    if isinstance(b, Line):
        return intersect_line_circle(b, a)
    return intersect_circle_circle(a, b)


# Scenes

ROLES = ("lattice", "figure", "auxiliary")
KINDS = {Point: "point", Line: "line", Circle: "circle"}


@dataclass
class SceneObject:
    id: str
    kind: str
    geometry: Point | Line | Circle
    role: str = "figure"


class Scene:
    """Ordered, uniquely named collection of geometric objects."""

    def __init__(self, objects=()):
        self._objects: dict[str, SceneObject] = {}
        for obj in objects:
            self.add(obj.id, obj.geometry, obj.role)

    def add(self, id: str, geometry, role: str = "figure") -> SceneObject:
        if id in self._objects:
            raise ValueError(f"duplicate scene id {id!r}")
        if role not in ROLES:
            raise ValueError(f"unknown role {role!r}")
        obj = SceneObject(id, KINDS[type(geometry)], geometry, role)
        self._objects[id] = obj
        return obj

    def set_role(self, id: str, role: str):
        if role not in ROLES:
            raise ValueError(f"unknown role {role!r}")
        self._objects[id].role = role

    def __getitem__(self, id: str) -> SceneObject:
        return self._objects[id]

    def __contains__(self, id) -> bool:
        return id in self._objects

    def __iter__(self) -> Iterator[SceneObject]:
        return iter(self._objects.values())

    def __len__(self):
        return len(self._objects)

    def of_kind(self, kind: str) -> list[SceneObject]:
        return [o for o in self if o.kind == kind]

    def __repr__(self):
        return f"Scene({len(self)} objects)"


# Traces

STEP_KINDS = ("line_through", "circle_through", "intersect")


@dataclass(frozen=True)
class Step:
    kind: str
    args: tuple[str, ...]
    created: str
    branch: int | None = None
    macro: str | None = None


@dataclass
class ConstructionTrace:
    seeds: dict[str, Point] = field(default_factory=dict)
    steps: list[Step] = field(default_factory=list)

    def validate(self):
        """Raise TraceError unless the trace uses only primitive steps on known ids."""
        known = set(self.seeds)
        kinds = {}
        for sid in self.seeds:
            kinds[sid] = "point"
        for i, step in enumerate(self.steps):
            if step.kind not in STEP_KINDS:
                raise TraceError(f"step {i}: non-primitive step kind {step.kind!r}")
            if len(step.args) != 2:
                raise TraceError(f"step {i}: expected two arguments")
            for arg in step.args:
                if arg not in known:
                    raise TraceError(f"step {i}: {arg!r} is not defined by an earlier step")
            if step.created in known:
                raise TraceError(f"step {i}: {step.created!r} created twice")
            arg_kinds = [kinds[a] for a in step.args]
            if step.kind == "intersect":
                if "point" in arg_kinds or step.branch not in (0, 1):
                    raise TraceError(f"step {i}: malformed intersection")
                kinds[step.created] = "point"
            else:
                if arg_kinds != ["point", "point"]:
                    raise TraceError(f"step {i}: {step.kind} needs two points")
                kinds[step.created] = "line" if step.kind == "line_through" else "circle"
            known.add(step.created)

    def is_valid(self) -> bool:
        try:
            self.validate()
        except TraceError:
            return False
        return True

    def replay(self) -> dict[str, Point | Line | Circle]:
        """Recompute every object from the seeds with the kernel primitives."""
        self.validate()
        objs: dict[str, Point | Line | Circle] = dict(self.seeds)
        for step in self.steps:
            a, b = (objs[x] for x in step.args)
            if step.kind == "line_through":
                objs[step.created] = line_through(a, b)
            elif step.kind == "circle_through":
                objs[step.created] = circle_through(a, b)
            else:
                pts = intersect(a, b)
                if step.branch >= len(pts):
                    raise TraceError(f"replay: branch {step.branch} of {step.args} does not exist")
                objs[step.created] = pts[step.branch]
        return objs

    def macros(self) -> set[str | None]:
        """Outermost macro names appearing in the steps (None for bare primitives)."""
        return {s.macro.split("/")[0] if s.macro else None for s in self.steps}


class Construction:
    """Applies primitive steps by id while recording the trace."""

    def __init__(self):
        self.trace = ConstructionTrace()
        self.objects: dict[str, Point | Line | Circle] = {}
        self.defining: dict[str, tuple[str, str]] = {}
        self._counter = 0
        self._macro: list[str] = []

    def _name(self, name: str | None) -> str:
        if name is None:
            while True:
                self._counter += 1
                name = f"${self._counter}"
                if name not in self.objects:
                    return name
        if name in self.objects:
            raise ValueError(f"{name!r} is already defined")
        return name

    def __getitem__(self, id: str):
        return self.objects[id]

    def __contains__(self, id) -> bool:
        return id in self.objects

    @contextlib.contextmanager
    def macro(self, label: str):
        self._macro.append(label)
        try:
            yield
        finally:
            self._macro.pop()

    def _record(self, kind, args, created, branch=None):
        label = "/".join(self._macro) or None
        self.trace.steps.append(Step(kind, tuple(args), created, branch, label))

    def seed(self, point: Point, name: str | None = None) -> str:
        name = self._name(name)
        self.objects[name] = point
        self.trace.seeds[name] = point
        return name

    def line(self, p: str, q: str, name: str | None = None) -> str:
        obj = line_through(self.objects[p], self.objects[q])
        name = self._name(name)
        self.objects[name] = obj
        self.defining[name] = (p, q)
        self._record("line_through", (p, q), name)
        return name

    def circle(self, center: str, through: str, name: str | None = None) -> str:
        obj = circle_through(self.objects[center], self.objects[through])
        name = self._name(name)
        self.objects[name] = obj
        self.defining[name] = (center, through)
        self._record("circle_through", (center, through), name)
        return name

    def intersections(self, a: str, b: str) -> list[Point]:
        return intersect(self.objects[a], self.objects[b])

    def intersect(self, a: str, b: str, branch: int = 0, name: str | None = None,
                  points: list[Point] | None = None) -> str:
        if points is None:
            points = self.intersections(a, b)
        if branch >= len(points):
            raise NoSuchIntersection(
                f"intersection {branch} of {a!r} and {b!r} does not exist "
                f"({len(points)} point{'s' if len(points) != 1 else ''})"
            )
        name = self._name(name)
        self.objects[name] = points[branch]
        self._record("intersect", (a, b), name, branch)
        return name
