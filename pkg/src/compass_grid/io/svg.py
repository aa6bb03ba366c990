"""Deterministic SVG rendering of scenes.

Lattice objects are drawn in red and figure objects in black by default,
after the wood panel.  Everything is computed exactly and only rounded (to 12
significant digits) when written, so identical scenes give identical bytes.
"""
from __future__ import annotations

import html
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import cmp_to_key

from ..exact import Constructible, approx_sig
from ..kernel import Circle, Line, Point, Scene, dist_sq

__all__ = ["RenderStyle", "EmptyScene", "scene_to_svg"]

SIG_DIGITS = 12


class EmptyScene(ValueError):
    pass


@dataclass(frozen=True)
class RenderStyle:
    lattice_color: str = "#CC0000"
    figure_color: str = "#000000"
    auxiliary_color: str = "#888888"
    stroke_width: float | None = None  # default: 1% of the circle spacing
    margin: float | None = None  # default: 5% of the bounding box
    background: str | None = None

    def __post_init__(self):
        if self.stroke_width is not None and self.stroke_width <= 0:
            raise ValueError("stroke_width must be positive")
        if self.margin is not None and self.margin < 0:
            raise ValueError("margin must be nonnegative")

    def color(self, role: str) -> str:
        return {"lattice": self.lattice_color, "auxiliary": self.auxiliary_color}.get(role, self.figure_color)


def _fmt(x) -> str:
    d = approx_sig(x, SIG_DIGITS) if isinstance(x, Constructible) else Decimal(x)
    if not d:
        return "0"
    s = format(d.normalize(), "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s


class _Box:
    def __init__(self):
        self.lo = self.hi = None  # [x, y] Constructibles

    def add(self, x: Constructible, y: Constructible):
        if self.lo is None:
            self.lo, self.hi = [x, y], [x, y]
            return
        self.lo = [min(self.lo[0], x), min(self.lo[1], y)]
        self.hi = [max(self.hi[0], x), max(self.hi[1], y)]

    @property
    def empty(self) -> bool:
        return self.lo is None


def _clip(line: Line, box: _Box) -> tuple[Point, Point] | None:
    """The chord of ``line`` inside ``box``, ordered along the line."""
    a, b, c = line.coeffs
    (x0, y0), (x1, y1) = box.lo, box.hi
    hits: list[Point] = []
    if b:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 <= y <= y1:
                hits.append(Point(x, y))
    if a:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 <= x <= x1:
                hits.append(Point(x, y))
    if len(hits) < 2:
        return None
    hits.sort(key=cmp_to_key(lambda p, q: (line.parameter(p) - line.parameter(q)).sign()))
    first, last = hits[0], hits[-1]
    if first == last:
        return None
    return first, last


def _spacing_hint(scene: Scene, box: _Box) -> Constructible:
    centers = [o.geometry.center for o in scene if isinstance(o.geometry, Circle)]
    best = None
    for i, p in enumerate(centers):
        for q in centers[i + 1:]:
            d = dist_sq(p, q)
            if d and (best is None or d < best):
                best = d
    if best is not None:
        return best.sqrt()
    radii = [o.geometry.radius_sq for o in scene if isinstance(o.geometry, Circle)]
    if radii:
        return max(radii).sqrt()
    return max(box.hi[0] - box.lo[0], box.hi[1] - box.lo[1], Constructible(1))


def scene_to_svg(scene: Scene, style: RenderStyle | None = None) -> str:
    """Render a scene as SVG 1.1, +y pointing up."""
    if not len(scene):
        raise EmptyScene("nothing to render")
    style = style or RenderStyle()

    box = _Box()
    for obj in scene:
        g = obj.geometry
        if isinstance(g, Point):
            box.add(g.x, g.y)
        elif isinstance(g, Circle):
            r = g.radius_sq.sqrt()
            box.add(g.center.x - r, g.center.y - r)
            box.add(g.center.x + r, g.center.y + r)

    segments: dict[str, tuple[Point, Point]] = {}
    loose: list[Line] = []
    for obj in scene:
        g = obj.geometry
        if isinstance(g, Line):
            seg = None if box.empty else _clip(g, box)
            if seg is None:
                loose.append(g)
            else:
                segments[obj.id] = seg
    for g in loose:
        box.add(g.p.x, g.p.y)
        box.add(g.q.x, g.q.y)
    for obj in scene:
        if isinstance(obj.geometry, Line) and obj.id not in segments:
            segments[obj.id] = (obj.geometry.p, obj.geometry.q)

    width = box.hi[0] - box.lo[0]
    height = box.hi[1] - box.lo[1]
    extent = max(width, height)
    if not extent:
        extent = Constructible(1)
    margin = extent * Fraction(1, 20) if style.margin is None else Constructible(Fraction(style.margin))
    if style.stroke_width is None:
        stroke = _spacing_hint(scene, box) * Fraction(1, 100)
    else:
        stroke = Constructible(Fraction(style.stroke_width))
    vx = box.lo[0] - margin
    vy = -(box.hi[1] + margin)
    vw = width + 2 * margin
    vh = height + 2 * margin
    if not vw:
        vw = extent
    if not vh:
        vh = extent

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}">',
    ]
    if style.background:
        out.append(f'<rect x="{_fmt(vx)}" y="{_fmt(vy)}" width="{_fmt(vw)}" height="{_fmt(vh)}" '
                   f'fill="{style.background}"/>')
    out.append(f'<g transform="scale(1,-1)" fill="none" stroke-width="{_fmt(stroke)}">')
    for obj in scene:
        g = obj.geometry
        attrs = f'id="{html.escape(obj.id)}" class="{obj.role}" stroke="{style.color(obj.role)}"'
        if isinstance(g, Line):
            p, q = segments[obj.id]
            out.append(f'<line {attrs} x1="{_fmt(p.x)}" y1="{_fmt(p.y)}" x2="{_fmt(q.x)}" y2="{_fmt(q.y)}"/>')
        elif isinstance(g, Circle):
            out.append(f'<circle {attrs} cx="{_fmt(g.center.x)}" cy="{_fmt(g.center.y)}" '
                       f'r="{_fmt(g.radius_sq.sqrt())}"/>')
        else:
            e = stroke * 3
            x, y = _fmt(g.x), _fmt(g.y)
            out.append(f'<path {attrs} d="M {_fmt(g.x - e)} {y} H {_fmt(g.x + e)} '
                       f'M {x} {_fmt(g.y - e)} V {_fmt(g.y + e)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
