"""
Perpendiculars and angle copies
===============================

Two elementary constructions: dropping a perpendicular from a point to a
line, and copying an angle onto a given line at a given point.  Each is
expanded into compass and straightedge primitives and recorded in a trace.
"""
from fractions import Fraction

from compass_grid import Angle, Constructible, Point, Side, copy_angle, line_through, perpendicular_from_point
from compass_grid.kernel import dot, intersect_line_line

# perpendicular from C = (2, -1) to the line y = x
line = line_through(Point(0, 0), Point(2, 2))
perp, trace = perpendicular_from_point(line, Point(2, -1))
print("foot:", intersect_line_line(line, perp))
print("dot product of directions:", dot(perp.direction, line.direction))
print("steps:", len(trace.steps), "kinds:", sorted({s.kind for s in trace.steps}))

# the first few steps, with the macro each belongs to
for step in trace.steps[:4]:
    print(f"  {step.kind:15s} {step.args} -> {step.created}  [{step.macro}]")

# copy a 60 degree angle onto a horizontal line at (2, 2)
sixty = Angle(Point(0, 0), Point(1, 0), Point(Fraction(1, 2), Constructible(3).sqrt() / 2))
target = line_through(Point(2, 2), Point(5, 2))
copied, trace = copy_angle(sixty, target, Point(2, 2), Side.LEFT)
check = Angle(Point(2, 2), Point(5, 2), copied.q)
print("copied cosine:", check.cosine(), "(exactly 1/2)")
print("trace length:", len(trace.steps), "outer macros:", trace.macros())
