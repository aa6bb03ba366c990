"""
The overlapping-circles grid
============================

A square lattice of red lines is ruled from two seed points, and an equal
circle is drawn on every node.  With radius equal to the spacing each circle
passes through its neighbours' centers, giving the familiar petal pattern.
"""
import tempfile
from fractions import Fraction
from pathlib import Path

from compass_grid import GridSpec, Point, generate_grid
from compass_grid.grid import adjacent_intersection_count
from compass_grid.io import scene_to_svg

scene, trace = generate_grid(Point(0, 0), Point(1, 0), GridSpec(5, 5, 1))
print(len(scene.of_kind("line")), "lattice lines,", len(scene.of_kind("circle")), "circles")
print(len(trace.steps), "primitive steps, valid trace:", trace.is_valid())

# every circle has exactly the same radius
print({str(c.geometry.radius_sq) for c in scene.of_kind("circle")})

# how neighbouring circles meet, by radius/spacing ratio
for ratio in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1):
    print(f"ratio {ratio}: {adjacent_intersection_count(ratio)} common points")

# seeds need not be axis aligned: a tilted grid with irrational spacing
tilted, _ = generate_grid(Point(0, 0), Point(1, 1), GridSpec.from_seeds(Point(0, 0), Point(1, 1), 3, 3))
print("tilted c2_2 center:", tilted["c2_2"].geometry.center)

out = Path(tempfile.gettempdir()) / "kha_grid.svg"
out.write_text(scene_to_svg(scene))
print("wrote", out)
