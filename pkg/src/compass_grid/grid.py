"""Overlapping-circles grids: exact generation and tolerant verification.

Generation rules a square lattice from two seed points using only the kernel
primitives and the perpendicular / distance-transfer macros, then draws one
compass circle per lattice node.  Verification works the other way round: it
takes digitized circles (plain floats) and fits a square lattice to them.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.spatial import cKDTree

from .constructions import Direction, midpoint, perpendicular, transfer, translate
from .exact import Constructible
from .kernel import Construction, ConstructionTrace, GeometryError, Point, Scene, cross, dist_sq

__all__ = [
    "GridSpec",
    "GridReport",
    "DegenerateSeed",
    "TooFewCircles",
    "DegenerateConfiguration",
    "generate_grid",
    "verify_grid",
    "adjacent_intersection_count",
]

log = logging.getLogger(__name__)


class DegenerateSeed(GeometryError):
    pass


class TooFewCircles(ValueError):
    pass


class DegenerateConfiguration(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    rows: int
    cols: int
    spacing: Constructible
    ratio: Constructible | int = 1

    def __post_init__(self):
        object.__setattr__(self, "spacing", Constructible(self.spacing))
        object.__setattr__(self, "ratio", Constructible(self.ratio))
        if self.rows < 1 or self.cols < 1:
            raise ValueError("a grid needs at least one row and one column")
        if self.spacing.sign() <= 0 or self.ratio.sign() <= 0:
            raise ValueError("spacing and ratio must be positive")

    @classmethod
    def from_seeds(cls, seed_o: Point, seed_x: Point, rows: int, cols: int, ratio=1) -> "GridSpec":
        if seed_o == seed_x:
            raise DegenerateSeed("seed points coincide")
        return cls(rows, cols, dist_sq(seed_o, seed_x).sqrt(), Constructible(ratio))

    @property
    def overlapping(self) -> bool:
        """Adjacent circles cross (ratio > 1/2)."""
        return self.ratio > Fraction(1, 2)

    def radius_sq(self) -> Constructible:
        return self.ratio * self.ratio * self.spacing * self.spacing


def _scaled_length(con: Construction, base: str, o: str, marks_x: list[str],
                   up: str, marks_y: list[str], up_dir: Direction, ratio: Fraction) -> str:
    """A point R on ``base`` with |oR| = ratio * spacing (intercept theorem)."""
    p, q = ratio.numerator, ratio.denominator
    _extend_marks(con, base, marks_x, p + 1, Direction.FORWARD)
    if q == 1:
        return marks_x[p]
    if ratio == Fraction(1, 2):
        m, _ = midpoint(con, marks_x[0], marks_x[1])
        return m
    _extend_marks(con, up, marks_y, q + 1, up_dir)
    slant = con.line(marks_y[q], marks_x[p])
    normal = perpendicular(con, slant, marks_y[1])
    parallel = perpendicular(con, normal, marks_y[1])
    return con.intersect(parallel, base, 0)


def _extend_marks(con: Construction, line: str, marks: list[str], n: int, direction: Direction):
    while len(marks) < n:
        marks.append(transfer(con, marks[-2], marks[-1], line, marks[-1], direction))


def generate_grid(seed_o: Point, seed_x: Point, spec: GridSpec,
                  construction: Construction | None = None) -> tuple[Scene, ConstructionTrace]:
    """Rule the lattice and draw ``rows * cols`` equal circles on its nodes.

    The bottom row is marked from ``seed_o`` towards ``seed_x`` by repeated
    compass transfer; a perpendicular is erected at every mark; rows are
    marked up the first perpendicular (to the left of o -> x) and a
    horizontal is erected at each.  Scene ids are ``h{i}``, ``v{j}`` and
    ``c{i}_{j}`` (the same names are used in the construction); only lines
    and circles enter the scene.
    """
    if seed_o == seed_x:
        raise DegenerateSeed("seed points coincide")
    if spec.spacing * spec.spacing != dist_sq(seed_o, seed_x):
        raise ValueError("spec.spacing must equal the seed distance")
    if not spec.ratio.is_rational():
        raise ValueError("only rational radius/spacing ratios are constructible here")
    if not spec.overlapping:
        log.warning("ratio %s <= 1/2: adjacent circles do not overlap", spec.ratio)

    con = construction if construction is not None else Construction()
    rows, cols = spec.rows, spec.cols
    o = con.seed(seed_o)
    x = con.seed(seed_x)
    base = con.line(o, x, name="h0")

    marks_x = [o, x]
    _extend_marks(con, base, marks_x, cols, Direction.FORWARD)
    verticals = [perpendicular(con, base, marks_x[j], name=f"v{j}") for j in range(cols)]

    v0 = con[verticals[0]]
    left = cross(con[base].direction, v0.direction).sign() > 0
    up = Direction.FORWARD if left else Direction.BACKWARD
    marks_y = [o, transfer(con, o, x, verticals[0], o, up)]
    _extend_marks(con, verticals[0], marks_y, rows, up)
    horizontals = [base] + [perpendicular(con, verticals[0], marks_y[i], name=f"h{i}")
                            for i in range(1, rows)]

    nodes: dict[tuple[int, int], str] = {}
    for i in range(rows):
        for j in range(cols):
            if i == 0:
                nodes[i, j] = marks_x[j]
            elif j == 0:
                nodes[i, j] = marks_y[i]
            else:
                nodes[i, j] = con.intersect(horizontals[i], verticals[j], 0)

    ratio = spec.ratio.as_fraction()
    if ratio != 1:
        r_mark = _scaled_length(con, base, o, marks_x, verticals[0], marks_y, up, ratio)

    circles = {}
    for i in range(rows):
        for j in range(cols):
            node = nodes[i, j]
            if ratio == 1:
                through = _neighbour(nodes, i, j, x)
            else:
                through = translate(con, o, r_mark, node)
            circles[i, j] = con.circle(node, through, name=f"c{i}_{j}")

    scene = Scene()
    for i, h in enumerate(horizontals):
        scene.add(f"h{i}", con[h], "lattice")
    for j, v in enumerate(verticals):
        scene.add(f"v{j}", con[v], "lattice")
    for (i, j), c in circles.items():
        scene.add(f"c{i}_{j}", con[c], "figure")
    return scene, con.trace


def _neighbour(nodes, i, j, fallback):
    for key in ((i, j + 1), (i, j - 1), (i + 1, j), (i - 1, j)):
        if key in nodes:
            return nodes[key]
    return fallback


def adjacent_intersection_count(ratio) -> int:
    """How many points two horizontally adjacent grid circles share."""
    from .kernel import intersect_circle_circle

    scene, _ = generate_grid(Point(0, 0), Point(1, 0), GridSpec(1, 2, 1, ratio))
    return len(intersect_circle_circle(scene["c0_0"].geometry, scene["c0_1"].geometry))


# Verification of digitized grids


@dataclass(frozen=True)
class GridReport:
    is_grid: bool
    fitted_spacing: float
    fitted_ratio: float
    basis_orthogonality_error: float
    max_center_residual: float
    max_radius_deviation: float

    def as_lines(self) -> list[str]:
        return [
            f"is_grid={str(self.is_grid).lower()}",
            f"fitted_spacing={self.fitted_spacing:.12g}",
            f"fitted_ratio={self.fitted_ratio:.12g}",
            f"basis_orthogonality_error={self.basis_orthogonality_error:.6g}",
            f"max_center_residual={self.max_center_residual:.6g}",
            f"max_radius_deviation={self.max_radius_deviation:.6g}",
        ]


def _as_arrays(circles) -> tuple[np.ndarray, np.ndarray]:
    rows = []
    for c in circles:
        if len(c) == 2:
            (cx, cy), r = c
        else:
            cx, cy, r = c
        rows.append((float(cx), float(cy), float(r)))
    arr = np.asarray(rows, dtype=float).reshape(-1, 3)
    return arr[:, :2], arr[:, 2]


def _fold(v: np.ndarray) -> np.ndarray:
    """Rotate displacement vectors by quarter turns into the sector [-45deg, 45deg)."""
    ang = np.arctan2(v[:, 1], v[:, 0])
    turns = np.floor((ang + np.pi / 4) / (np.pi / 2))
    a = -turns * (np.pi / 2)
    c, s = np.cos(a), np.sin(a)
    return np.column_stack([c * v[:, 0] - s * v[:, 1], s * v[:, 0] + c * v[:, 1]])


def _primary_basis(centers: np.ndarray, tol: float) -> np.ndarray:
    tree = cKDTree(centers)
    dist, idx = tree.query(centers, k=2)
    disp = centers[idx[:, 1]] - centers
    folded = _fold(disp)
    scale = float(np.median(dist[:, 1]))
    res = max(tol, 1e-12) * scale
    keys = [tuple(k) for k in np.round(folded / res).astype(np.int64)]
    counts = Counter(keys)
    best = max(counts.values())
    modal = [k for k, n in counts.items() if n == best]
    # ties: smaller angle to +x
    modal.sort(key=lambda k: (abs(np.arctan2(k[1], k[0])), k))
    members = np.array([kk == modal[0] for kk in keys])
    return folded[members].mean(axis=0)


def _refine(centers: np.ndarray, b1: np.ndarray, b2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Median of all near-neighbour displacements matching +-b1 or +-b2."""
    length = float(np.hypot(*b1))
    tree = cKDTree(centers)
    pairs = np.array(sorted(tree.query_pairs(1.5 * length)), dtype=np.int64).reshape(-1, 2)
    disp = centers[pairs[:, 1]] - centers[pairs[:, 0]]
    out = []
    for b in (b1, b2):
        matched = []
        for d in disp:
            for s in (1.0, -1.0):
                if np.hypot(*(s * d - b)) < 0.3 * length:
                    matched.append(s * d)
        out.append(np.median(np.array(matched), axis=0) if matched else b)
    return out[0], out[1]


def verify_grid(circles, tol: float = 1e-3) -> GridReport:
    """Fit a square lattice to digitized circles and report how well it fits.

    ``circles`` holds ``((cx, cy), r)`` or ``(cx, cy, r)`` records.  Center
    residuals are given as fractions of the fitted spacing and radius
    deviations relative to the mean radius.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    centers, radii = _as_arrays(circles)
    n = len(centers)
    if n < 4:
        raise TooFewCircles(f"need at least 4 circles, got {n}")
    spread = centers - centers.mean(axis=0)
    sv = np.linalg.svd(spread, compute_uv=False)
    if sv[0] == 0 or sv[1] <= 1e-9 * sv[0]:
        raise DegenerateConfiguration("circle centers are collinear")

    b1 = _primary_basis(centers, tol)
    b2 = np.array([-b1[1], b1[0]])
    b1, b2 = _refine(centers, b1, b2)

    cosang = float(np.dot(b1, b2) / (np.hypot(*b1) * np.hypot(*b2)))
    orth_err = abs(float(np.arccos(np.clip(cosang, -1.0, 1.0))) - np.pi / 2)
    spacing = float((np.hypot(*b1) + np.hypot(*b2)) / 2)

    basis = np.column_stack([b1, b2])
    ref = centers[np.argmin(np.hypot(*(centers - np.median(centers, axis=0)).T))]
    ij = np.rint(np.linalg.solve(basis, (centers - ref).T).T)
    origin = np.median(centers - ij @ basis.T, axis=0)
    resid = np.hypot(*(centers - origin - ij @ basis.T).T) / spacing
    max_resid = float(resid.max())

    mean_r = float(radii.mean())
    rad_dev = float(np.abs(radii - mean_r).max() / mean_r) if mean_r > 0 else float("inf")

    is_grid = orth_err <= tol and max_resid <= tol and rad_dev <= tol
    return GridReport(
        is_grid=bool(is_grid),
        fitted_spacing=spacing,
        fitted_ratio=mean_r / spacing,
        basis_orthogonality_error=orth_err,
        max_center_residual=max_resid,
        max_radius_deviation=rad_dev,
    )
