from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compass_grid.exact import Constructible, approx
from compass_grid.kernel import (
    Circle,
    CoincidentObjects,
    Construction,
    ConstructionTrace,
    DegenerateCircle,
    DegenerateLine,
    Line,
    NoSuchIntersection,
    Point,
    Scene,
    Step,
    TraceError,
    circle_through,
    cross,
    incidence,
    intersect,
    intersect_circle_circle,
    intersect_line_circle,
    intersect_line_line,
    line_through,
)
from conftest import small_rationals
from oracles import circle_circle_float, line_circle_float, line_line_float

S3 = Constructible(3).sqrt()


def fl(p: Point) -> tuple[float, float]:
    return float(approx(p.x, 16)), float(approx(p.y, 16))


def rand_point(rng, lim=20):
    return Point(Fraction(rng.randint(-lim, lim), rng.randint(1, lim)),
                 Fraction(rng.randint(-lim, lim), rng.randint(1, lim)))


def test_vesica():
    a, b = Point(0, 0), Point(1, 0)
    p, q = intersect_circle_circle(circle_through(a, b), circle_through(b, a))
    assert p == Point(Fraction(1, 2), S3 / 2)
    assert q == Point(Fraction(1, 2), -S3 / 2)


def test_line_circle_order_follows_line_direction():
    c = circle_through(Point(0, 0), Point(1, 0))
    fwd = intersect_line_circle(line_through(Point(-2, 0), Point(2, 0)), c)
    back = intersect_line_circle(line_through(Point(2, 0), Point(-2, 0)), c)
    assert fwd == [Point(-1, 0), Point(1, 0)]
    assert back == [Point(1, 0), Point(-1, 0)]


def test_tangent_and_miss():
    c = circle_through(Point(0, 0), Point(1, 0))
    assert intersect_line_circle(line_through(Point(-3, 1), Point(3, 1)), c) == [Point(0, 1)]
    assert intersect_line_circle(line_through(Point(-3, 2), Point(3, 2)), c) == []
    assert intersect_circle_circle(c, circle_through(Point(2, 0), Point(1, 0))) == [Point(1, 0)]
    assert intersect_circle_circle(c, circle_through(Point(5, 0), Point(6, 0))) == []
    assert intersect_circle_circle(c, circle_through(Point(0, 0), Point(2, 0))) == []


def test_degenerate_and_coincident():
    with pytest.raises(DegenerateLine):
        line_through(Point(1, 1), Point(1, 1))
    with pytest.raises(DegenerateCircle):
        circle_through(Point(1, 1), Point(1, 1))
    l = line_through(Point(0, 0), Point(1, 1))
    with pytest.raises(CoincidentObjects):
        intersect(l, line_through(Point(2, 2), Point(-3, -3)))
    c = circle_through(Point(0, 0), Point(1, 0))
    with pytest.raises(CoincidentObjects):
        intersect(c, circle_through(Point(0, 0), Point(0, -1)))
    assert intersect_line_line(l, line_through(Point(0, 1), Point(1, 2))) is None


def test_line_line():
    p = intersect_line_line(line_through(Point(0, 0), Point(2, 2)), line_through(Point(0, 2), Point(2, 0)))
    assert p == Point(1, 1)


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[small_rationals] * 6))
def test_intersections_are_incident(v):
    a, b, c = Point(v[0], v[1]), Point(v[2], v[3]), Point(v[4], v[5])
    if a == b or a == c or b == c:
        return
    l = line_through(a, b)
    k = circle_through(c, a)
    for p in intersect(l, k):
        assert incidence(p, l) and incidence(p, k)
    k2 = circle_through(b, c)
    if k.same_as(k2):
        return
    for p in intersect(k, k2):
        assert incidence(p, k) and incidence(p, k2)


@settings(max_examples=100, deadline=None)
@given(st.tuples(*[small_rationals] * 6))
def test_circle_circle_first_point_is_left(v):
    c1, t1, c2 = Point(v[0], v[1]), Point(v[2], v[3]), Point(v[4], v[5])
    if c1 == t1 or c1 == c2 or c2 == t1:
        return
    k1, k2 = circle_through(c1, t1), circle_through(c2, t1)
    pts = intersect(k1, k2)
    if len(pts) == 2:
        d = c2 - c1
        assert cross(d, pts[0] - c1).sign() > 0
        assert cross(d, pts[1] - c1).sign() < 0


def test_float_oracle_agreement():
    rng = random.Random(11)
    n = 0
    while n < 300:
        p, q, c, t = (rand_point(rng) for _ in range(4))
        if p == q or c == t:
            continue
        pts = intersect_line_circle(line_through(p, q), circle_through(c, t))
        ref = line_circle_float(fl(p), fl(q), fl(c), float(approx((c.x - t.x) ** 2 + (c.y - t.y) ** 2, 16)))
        if len(pts) != 2 or len(ref) != 2:
            continue
        for got, want in zip(pts, ref):
            assert abs(fl(got)[0] - want[0]) < 1e-9 and abs(fl(got)[1] - want[1]) < 1e-9
        n += 1


def test_scene():
    s = Scene()
    s.add("A", Point(0, 0))
    s.add("l", line_through(Point(0, 0), Point(1, 0)), "lattice")
    with pytest.raises(ValueError):
        s.add("A", Point(1, 1))
    with pytest.raises(ValueError):
        s.add("B", Point(1, 1), "decor")
    s.set_role("A", "auxiliary")
    assert [o.id for o in s] == ["A", "l"]
    assert s["A"].role == "auxiliary" and s["l"].kind == "line"
    assert [o.id for o in s.of_kind("line")] == ["l"]
    assert "A" in s and len(s) == 2


def test_construction_trace_replays():
    con = Construction()
    a = con.seed(Point(0, 0), "A")
    b = con.seed(Point(1, 0), "B")
    c1, c2 = con.circle(a, b), con.circle(b, a)
    p = con.intersect(c1, c2, 0, name="P")
    assert con.trace.is_valid()
    assert con.trace.replay()["P"] == con[p]
    with pytest.raises(NoSuchIntersection):
        con.intersect(c1, con.circle(con.seed(Point(20, 0)), con.seed(Point(21, 0))), 0)


def test_trace_validation_rejects_bad_steps():
    seeds = {"A": Point(0, 0), "B": Point(1, 0)}
    bad_ref = ConstructionTrace(dict(seeds), [Step("line_through", ("A", "Z"), "l")])
    assert not bad_ref.is_valid()
    with pytest.raises(TraceError):
        bad_ref.validate()
    bad_kind = ConstructionTrace(dict(seeds), [Step("ruler_slide", ("A", "B"), "l")])
    assert not bad_kind.is_valid()
    reuse = ConstructionTrace(dict(seeds), [Step("line_through", ("A", "B"), "A")])
    assert not reuse.is_valid()


def test_geometry_types():
    l = Line(Point(0, 0), Point(2, 4))
    assert l.coeffs[0] == 1
    assert l.parameter(Point(1, 2)) == Fraction(1, 2)
    assert l.same_as(Line(Point(-1, -2), Point(3, 6)))
    c = Circle(Point(0, 0), Point(3, 4))
    assert c.radius_sq == 25 and c.same_as(Circle(Point(0, 0), Point(5, 0)))
