"""
Checking a digitized pattern
============================

Given circle centers and radii read off a drawing, ``verify_grid`` fits a
square lattice and reports how far the drawing strays from it.  Here the
"drawing" is our own grid printed to 15 digits, first clean and then with
one circle nudged by 5% of the spacing.
"""
import numpy as np

from compass_grid import GridSpec, Point, generate_grid, verify_grid
from compass_grid.exact import approx_sig

scene, _ = generate_grid(Point(0, 0), Point(1, 0), GridSpec(5, 5, 1))
records = [
    (float(approx_sig(c.geometry.center.x, 15)), float(approx_sig(c.geometry.center.y, 15)),
     float(approx_sig(c.geometry.radius_sq.sqrt(), 15)))
    for c in scene.of_kind("circle")
]

print("\n".join(verify_grid(records, tol=1e-3).as_lines()))

nudged = list(records)
cx, cy, r = nudged[12]
nudged[12] = (cx + 0.05, cy, r)
print()
print("\n".join(verify_grid(nudged, tol=1e-3).as_lines()))

# the fit does not care about rotation, scale or offset
theta, s = 0.4, 3.0
rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
moved = [(*(s * rot @ np.array([x, y]) + [10, -4]), s * r) for x, y, r in records]
report = verify_grid(moved, tol=1e-6)
print()
print("rotated and scaled:", report.is_grid, f"spacing {report.fitted_spacing:.6f}")
