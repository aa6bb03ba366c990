"""Exact compass-and-straightedge constructions and overlapping-circle grids."""
from .constructions import (
    Angle,
    Direction,
    Side,
    copy_angle,
    midpoint_and_bisector,
    perpendicular_from_point,
    transfer_distance,
)
from .exact import Constructible, approx, parse_expr, to_expr
from .grid import GridReport, GridSpec, generate_grid, verify_grid
from .kernel import (
    Circle,
    Construction,
    ConstructionTrace,
    Line,
    Point,
    Scene,
    circle_through,
    intersect,
    line_through,
)

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "Direction",
    "Side",
    "copy_angle",
    "midpoint_and_bisector",
    "perpendicular_from_point",
    "transfer_distance",
    "Constructible",
    "approx",
    "parse_expr",
    "to_expr",
    "GridReport",
    "GridSpec",
    "generate_grid",
    "verify_grid",
    "Circle",
    "Construction",
    "ConstructionTrace",
    "Line",
    "Point",
    "Scene",
    "circle_through",
    "intersect",
    "line_through",
]
