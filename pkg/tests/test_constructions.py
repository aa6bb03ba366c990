from __future__ import annotations

import random
from fractions import Fraction

import pytest

from compass_grid.constructions import (
    Angle,
    DegenerateAngle,
    DegenerateInput,
    Direction,
    Side,
    VertexNotOnLine,
    copy_angle,
    midpoint_and_bisector,
    opens_left,
    perpendicular_from_point,
    transfer_distance,
)
from compass_grid.exact import Constructible
from compass_grid.kernel import Point, cross, dist_sq, dot, incidence, intersect_line_line, line_through

PRIMITIVES = {"line_through", "circle_through", "intersect"}


def rand_point(rng, lim=20):
    return Point(Fraction(rng.randint(-lim, lim), rng.randint(1, lim)),
                 Fraction(rng.randint(-lim, lim), rng.randint(1, lim)))


def primitives_only(trace):
    return trace.is_valid() and all(s.kind in PRIMITIVES for s in trace.steps)


def test_midpoint_and_bisector():
    m, bis, trace = midpoint_and_bisector(Point(0, 0), Point(4, 2))
    assert m == Point(2, 1)
    assert dot(bis.direction, (4, 2)).sign() == 0
    assert primitives_only(trace)
    with pytest.raises(DegenerateInput):
        midpoint_and_bisector(Point(1, 1), Point(1, 1))


def test_perpendicular_foot():
    l = line_through(Point(0, 0), Point(2, 2))
    perp, trace = perpendicular_from_point(l, Point(2, -1))
    assert intersect_line_line(l, perp) == Point(Fraction(1, 2), Fraction(1, 2))
    assert incidence(Point(2, -1), perp)
    assert primitives_only(trace)


def test_perpendicular_at_point_on_line():
    l = line_through(Point(0, 0), Point(3, 1))
    perp, _ = perpendicular_from_point(l, Point(6, 2))
    assert incidence(Point(6, 2), perp)
    assert dot(perp.direction, l.direction).sign() == 0


def test_transfer_sqrt2():
    base = line_through(Point(0, 0), Point(1, 0))
    fwd, trace = transfer_distance(Point(0, 0), Point(1, 1), base, Point(0, 0), Direction.FORWARD)
    back, _ = transfer_distance(Point(0, 0), Point(1, 1), base, Point(0, 0), "backward")
    s2 = Constructible(2).sqrt()
    assert fwd == Point(s2, 0) and back == Point(-s2, 0)
    assert "transfer" in trace.macros()
    with pytest.raises(VertexNotOnLine):
        transfer_distance(Point(0, 0), Point(1, 1), base, Point(0, 1))
    with pytest.raises(DegenerateInput):
        transfer_distance(Point(1, 1), Point(1, 1), base, Point(0, 0))


def test_transfer_random_lengths():
    rng = random.Random(5)
    for _ in range(30):
        p, q, a, b = (rand_point(rng) for _ in range(4))
        if p == q or a == b:
            continue
        line = line_through(a, b)
        r, trace = transfer_distance(p, q, line, a)
        assert dist_sq(a, r) == dist_sq(p, q)
        assert incidence(r, line)
        assert line.parameter(r) > line.parameter(a)
        assert primitives_only(trace)


def test_copy_sixty_degrees():
    src = Angle(Point(0, 0), Point(1, 0), Point(Fraction(1, 2), Constructible(3).sqrt() / 2))
    target = line_through(Point(2, 2), Point(5, 2))
    copied, trace = copy_angle(src, target, Point(2, 2), Side.LEFT)
    u = copied.direction
    assert incidence(Point(2, 2), copied)
    far = copied.q
    got = Angle(Point(2, 2), Point(5, 2), far)
    assert got.cosine() == Fraction(1, 2)
    assert opens_left(target, Point(2, 2), far) > 0
    assert primitives_only(trace) and "copy_angle" in trace.macros()
    assert u[0] or u[1]


def test_copy_angle_sides_and_obtuse():
    src = Angle(Point(0, 0), Point(2, 0), Point(-1, 3))
    target = line_through(Point(1, 1), Point(4, 5))
    for side, sgn in ((Side.LEFT, 1), (Side.RIGHT, -1)):
        copied, _ = copy_angle(src, target, Point(1, 1), side)
        got = Angle(Point(1, 1), Point(4, 5), copied.q)
        assert got.cosine() == src.cosine()
        assert opens_left(target, Point(1, 1), copied.q) == sgn


def test_copy_angle_errors():
    with pytest.raises(DegenerateAngle):
        Angle(Point(0, 0), Point(0, 0), Point(1, 1))
    src = Angle(Point(0, 0), Point(1, 0), Point(0, 1))
    with pytest.raises(VertexNotOnLine):
        copy_angle(src, line_through(Point(0, 0), Point(1, 0)), Point(3, 3))


def test_copy_zero_angle_is_the_line():
    src = Angle(Point(0, 0), Point(1, 1), Point(2, 2))
    target = line_through(Point(0, 5), Point(1, 5))
    copied, _ = copy_angle(src, target, Point(0, 5))
    assert copied.same_as(target)
    assert cross(copied.direction, target.direction).sign() == 0


def test_perpendicular_twice_is_parallel():
    rng = random.Random(8)
    for _ in range(20):
        a, b, p = rand_point(rng), rand_point(rng), rand_point(rng)
        if a == b:
            continue
        line = line_through(a, b)
        once, _ = perpendicular_from_point(line, p)
        twice, _ = perpendicular_from_point(once, p)
        assert cross(twice.direction, line.direction).sign() == 0


def test_results_replay_from_trace():
    line = line_through(Point(0, 0), Point(3, 1))
    perp, trace = perpendicular_from_point(line, Point(1, 4))
    assert trace.replay()[trace.steps[-1].created].same_as(perp)
    m, _, trace = midpoint_and_bisector(Point(1, 1), Point(4, 7))
    assert trace.replay()[trace.steps[-1].created] == m
    src = Angle(Point(0, 0), Point(3, 0), Point(1, 2))
    copied, trace = copy_angle(src, line, Point(0, 0), Side.RIGHT)
    assert trace.replay()[trace.steps[-1].created].same_as(copied)
