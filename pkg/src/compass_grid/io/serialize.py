"""Scene and trace documents (JSON).

A scene document looks like::

    {"version": 1,
     "objects": [{"id": "P", "kind": "point", "role": "figure",
                  "exact": {"x": "1/2", "y": "(0)+(1/2)*sqrt(3)"},
                  "approx": {"x": 0.5, "y": 0.866025403784439}}, ...]}

Lines carry their two defining points ``p``/``q``; circles carry ``center``,
``through`` and the redundant ``radius_sq``.  ``exact`` strings are radical
expressions (see :func:`compass_grid.exact.to_expr`); ``approx`` numbers are
rounded to 15 significant digits.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Any

from ..exact import Constructible, approx_sig, parse_expr, to_expr
from ..kernel import Circle, ConstructionTrace, GeometryError, Line, Point, Scene, Step

__all__ = [
    "VERSION",
    "MalformedDocument",
    "scene_to_document",
    "document_to_scene",
    "dumps",
    "scene_to_json",
    "scene_from_json",
    "trace_to_document",
    "trace_from_document",
    "read_circles",
]

VERSION = 1


class MalformedDocument(ValueError):
    pass


def _approx(x: Constructible) -> float:
    return float(approx_sig(x, 15))


def _point_exact(p: Point) -> dict:
    return {"x": to_expr(p.x), "y": to_expr(p.y)}


def _point_approx(p: Point) -> dict:
    return {"x": _approx(p.x), "y": _approx(p.y)}


def _object_doc(obj) -> dict[str, Any]:
    g = obj.geometry
    if isinstance(g, Point):
        exact, approx = _point_exact(g), _point_approx(g)
    elif isinstance(g, Line):
        exact = {"p": _point_exact(g.p), "q": _point_exact(g.q)}
        approx = {"p": _point_approx(g.p), "q": _point_approx(g.q)}
    else:
        exact = {
            "center": _point_exact(g.center),
            "through": _point_exact(g.through),
            "radius_sq": to_expr(g.radius_sq),
        }
        approx = {
            "center": _point_approx(g.center),
            "through": _point_approx(g.through),
            "radius_sq": _approx(g.radius_sq),
        }
    return {"id": obj.id, "kind": obj.kind, "role": obj.role, "exact": exact, "approx": approx}


def scene_to_document(scene: Scene) -> dict[str, Any]:
    return {"version": VERSION, "objects": [_object_doc(o) for o in scene]}


def _field(d, key, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise MalformedDocument(f"missing field {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise MalformedDocument(f"field {key!r} must be {kind.__name__}")
    return v


def _read_point(d) -> Point:
    return Point(parse_expr(_field(d, "x", str)), parse_expr(_field(d, "y", str)))


def document_to_scene(doc: dict[str, Any]) -> Scene:
    if _field(doc, "version") != VERSION:
        raise MalformedDocument(f"unsupported document version {doc.get('version')!r}")
    scene = Scene()
    for entry in _field(doc, "objects", list):
        oid = _field(entry, "id", str)
        kind = _field(entry, "kind", str)
        role = _field(entry, "role", str)
        exact = _field(entry, "exact", dict)
        try:
            if kind == "point":
                geom = _read_point(exact)
            elif kind == "line":
                geom = Line(_read_point(_field(exact, "p")), _read_point(_field(exact, "q")))
            elif kind == "circle":
                geom = Circle(_read_point(_field(exact, "center")), _read_point(_field(exact, "through")))
            else:
                raise MalformedDocument(f"unknown object kind {kind!r}")
        except GeometryError as exc:
            raise MalformedDocument(f"object {oid!r}: {exc}") from None
        try:
            scene.add(oid, geom, role)
        except ValueError as exc:
            raise MalformedDocument(str(exc)) from None
    return scene


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def scene_to_json(scene: Scene) -> str:
    return dumps(scene_to_document(scene))


def scene_from_json(text: str) -> Scene:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from None
    return document_to_scene(doc)


def trace_to_document(trace: ConstructionTrace) -> dict[str, Any]:
    steps = []
    for s in trace.steps:
        entry = {"kind": s.kind, "args": list(s.args), "created": s.created}
        if s.branch is not None:
            entry["branch"] = s.branch
        if s.macro is not None:
            entry["macro"] = s.macro
        steps.append(entry)
    return {
        "version": VERSION,
        "seeds": [{"id": k, **_point_exact(p)} for k, p in trace.seeds.items()],
        "steps": steps,
    }


def trace_from_document(doc: dict[str, Any]) -> ConstructionTrace:
    trace = ConstructionTrace()
    for seed in _field(doc, "seeds", list):
        trace.seeds[_field(seed, "id", str)] = _read_point(seed)
    for s in _field(doc, "steps", list):
        trace.steps.append(Step(
            _field(s, "kind", str),
            tuple(_field(s, "args", list)),
            _field(s, "created", str),
            s.get("branch"),
            s.get("macro"),
        ))
    return trace


def read_circles(text: str) -> list[tuple[float, float, float]]:
    """Circles for grid verification from a JSON array or ``cx,cy,r`` CSV."""
    stripped = text.lstrip()
    try:
        if stripped.startswith("["):
            records = json.loads(text)
            return [(float(r["cx"]), float(r["cy"]), float(r["r"])) for r in records]
        reader = csv.DictReader(io.StringIO(text))
        fields = [f.strip() for f in (reader.fieldnames or [])]
        if not {"cx", "cy", "r"} <= set(fields):
            raise MalformedDocument("CSV input needs a 'cx,cy,r' header")
        reader.fieldnames = fields
        return [(float(r["cx"]), float(r["cy"]), float(r["r"])) for r in reader]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MalformedDocument):
            raise
        raise MalformedDocument(f"bad circle record: {exc}") from None
