"""Invariance theorems beyond the circumbilliard itself.

Covers the poristic family (fixed incircle and circumcircle) and its
invariant circumbilliard aspect ratio, the Feuerbach circumhyperbola
and the excentral Jerabek circumhyperbola with their invariant focal
length ratio, and the excentral inconics whose semi-axes are closed
forms in the reference inradius and circumradius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import centers
from .billiard import BilliardShape, inradius_to_circumradius, orbit
from .errors import ClosureFailure, DegenerateConic, InvalidShape
from .kernel import Conic, Point, Triangle

# Relative focal-length floor below which a hyperbola counts as collapsed.
FOCAL_COLLAPSE_TOL = 1e-6


@dataclass(frozen=True)
class PoristicShape:
    """Fixed incircle radius r and circumcircle radius R with R >= 2r.

    The incircle center sits at distance d = sqrt(R (R - 2r)) from the
    circumcircle center, which is what makes the one-parameter triangle
    family close up.
    """

    r: float
    R: float

    def __post_init__(self):
        if not (0.0 < self.r and 0.0 < self.R):
            raise InvalidShape("radii must be positive")
        if self.R < 2.0 * self.r:
            raise InvalidShape(f"require R >= 2 r, got r={self.r}, R={self.R}")

    @property
    def d(self) -> float:
        return math.sqrt(self.R * (self.R - 2.0 * self.r))

    @property
    def rho(self) -> float:
        return self.r / self.R


def poristic_triangle(ps: PoristicShape, theta: float) -> Triangle:
    """Family member with first vertex at angle theta on the circumcircle.

    The two tangents from the vertex to the incircle meet the
    circumcircle again at the other two vertices; tangency of the third
    side then holds by the Poncelet porism and is verified before
    returning.
    """
    inc = Point(ps.d, 0.0)
    v1 = Point(ps.R * math.cos(theta), ps.R * math.sin(theta))
    w = inc - v1
    reach = w.norm()
    base = math.atan2(w.y, w.x)
    half = math.asin(min(1.0, ps.r / reach))
    others = []
    for sign in (1.0, -1.0):
        ang = base + sign * half
        u = Point(math.cos(ang), math.sin(ang))
        others.append(v1 + (-2.0 * v1.dot(u)) * u)
    v2, v3 = others
    n = Point(v3.y - v2.y, v2.x - v3.x)
    closure = abs(abs((inc - v2).dot(n)) / n.norm() - ps.r)
    if closure > 1e-9 * ps.R:
        raise ClosureFailure(f"third side misses the incircle by {closure:.3e}")
    return Triangle(v1, v2, v3)


def poristic_cb_aspect(ps: PoristicShape) -> float:
    """Invariant circumbilliard aspect ratio of the poristic family."""
    rho = ps.rho
    num = rho * rho + 2.0 * (rho + 1.0) * math.sqrt(1.0 - 2.0 * rho) + 2.0
    return math.sqrt(num / (rho * (rho + 4.0)))


@dataclass(frozen=True)
class RectHyperbola:
    """Rectangular hyperbola c1 x + c2 y + c3 xy = 0 through the origin.

    Its asymptotes are axis-parallel; translating it by minus its center
    gives x y = k with k = c1 c2 / c3^2.
    """

    c1: float
    c2: float
    c3: float

    @property
    def focal_length(self) -> float:
        return math.sqrt(abs(8.0 * self.c1 * self.c2 / (self.c3 * self.c3)))

    @property
    def center(self) -> Point:
        return Point(-self.c2 / self.c3, -self.c1 / self.c3)

    @property
    def xy_constant(self) -> float:
        """k in the recentred form x y = k."""
        return self.c1 * self.c2 / (self.c3 * self.c3)

    def value(self, p: Point) -> float:
        return self.c1 * p.x + self.c2 * p.y + self.c3 * p.x * p.y

    def recentred_conic(self) -> Conic:
        """Five-coefficient form of the copy translated to the origin."""
        k = self.xy_constant
        if k == 0.0:
            raise DegenerateConic("hyperbola collapsed to its asymptotes")
        return Conic(0.0, 0.0, -1.0 / k, 0.0, 0.0)


def _xy_circumconic(tri: Triangle) -> RectHyperbola:
    """Conic c1 x + c2 y + c3 xy = 0 through three points and the origin.

    Exists only when the 3x3 coefficient matrix is singular, which for
    orbit triangles (and their excentrals) holds because the conic also
    passes through the stationary Mittenpunkt at the origin.  The
    coefficient vector is the null vector, taken as the largest cross
    product of two rows.
    """
    rows = [np.array([p.x, p.y, p.x * p.y]) for p in tri.vertices]
    candidates = [
        np.cross(rows[1], rows[2]),
        np.cross(rows[2], rows[0]),
        np.cross(rows[0], rows[1]),
    ]
    c = max(candidates, key=np.linalg.norm)
    scale = max(np.abs(np.array(rows)).max(), 1e-300) * np.linalg.norm(c)
    residual = max(abs(float(r @ c)) for r in rows) / scale
    if residual > 1e-9:
        raise DegenerateConic(
            "no axis-parallel circumhyperbola through the origin "
            f"(null residual {residual:.3e}); is the Mittenpunkt at the origin?"
        )
    L = tri.scale()
    norm = abs(c[0]) + abs(c[1]) + abs(c[2]) * L
    if abs(c[2]) * L <= 1e-12 * norm:
        raise DegenerateConic("hyperbola center at infinity")
    hyp = RectHyperbola(float(c[0]), float(c[1]), float(c[2]))
    if hyp.focal_length <= FOCAL_COLLAPSE_TOL * L:
        raise DegenerateConic("focal points collapsed (isosceles configuration)")
    return hyp


def feuerbach_hyperbola(t: Triangle) -> RectHyperbola:
    """Feuerbach circumhyperbola of an orbit triangle centered at the origin.

    Passes through the vertices, the incenter, the orthocenter and the
    origin; centered on the Feuerbach point X11.
    """
    return _xy_circumconic(t)


def jerabek_excentral(t: Triangle) -> RectHyperbola:
    """Jerabek circumhyperbola of the excentral triangle.

    Passes through the three excenters, the incenter and the origin;
    centered on X100.
    """
    return _xy_circumconic(centers.excentral(t))


def focal_ratio_closed_form(shape: BilliardShape) -> float:
    """Invariant ratio of the excentral-Jerabek to Feuerbach focal lengths."""
    return math.sqrt(2.0 / inradius_to_circumradius(shape))


@dataclass(frozen=True)
class FocalSample:
    t: float
    feuerbach: float
    jerabek_excentral: float

    @property
    def ratio(self) -> float:
        return self.jerabek_excentral / self.feuerbach


def focal_profile(shape: BilliardShape, n: int = 720) -> list[FocalSample]:
    """Focal lengths of both hyperbolas over t in (0, pi/2).

    Parameters within 1e-3 rad of the isosceles endpoints are excluded
    (the hyperbolas degenerate there).
    """
    out = []
    for k in range(n):
        t = (k + 0.5) * (0.5 * math.pi / n)
        if t < 1e-3 or (0.5 * math.pi - t) < 1e-3:
            continue
        tri = orbit(shape, t).triangle
        out.append(
            FocalSample(
                t,
                feuerbach_hyperbola(tri).focal_length,
                jerabek_excentral(tri).focal_length,
            )
        )
    return out


def count_interior_maxima(values) -> int:
    v = list(values)
    return sum(
        1 for i in range(1, len(v) - 1) if v[i] > v[i - 1] and v[i] > v[i + 1]
    )


def billiard_intersections(
    shape: BilliardShape, hyp: RectHyperbola, grid: int = 4096
) -> list[Point]:
    """Real intersections of the hyperbola with the billiard boundary.

    Counts sign changes of the hyperbola form on a boundary grid and
    refines each bracket by bisection.
    """
    ts = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    vals = np.array([hyp.value(shape.boundary_point(float(t))) for t in ts])
    points = []
    for i in range(grid):
        j = (i + 1) % grid
        if vals[i] == 0.0:
            points.append(shape.boundary_point(float(ts[i])))
            continue
        if vals[i] * vals[j] < 0.0:
            lo, hi = float(ts[i]), float(ts[i]) + 2.0 * math.pi / grid
            flo = vals[i]
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                fm = hyp.value(shape.boundary_point(mid))
                if flo * fm <= 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            points.append(shape.boundary_point(0.5 * (lo + hi)))
    return points


def excentral_inconic_axes(t: Triangle, which: str) -> tuple[float, float]:
    """Semi-axes of a named inconic of the excentral triangle.

    ``which`` is "x3" for the inconic centered on the excentral
    circumcenter, giving (R + d, R - d), or "macbeath" for the inconic
    centered on the excentral nine-point center, giving
    (R, sqrt(R^2 - d^2)); r, R, d are metric quantities of the
    reference triangle.
    """
    r, R = t.inradius(), t.circumradius()
    d = math.sqrt(max(R * (R - 2.0 * r), 0.0))
    if which == "x3":
        return (R + d, R - d)
    if which == "macbeath":
        return (R, math.sqrt(R * R - d * d))
    raise KeyError(f"unknown inconic {which!r}")


def x3_inconic_ratio(rho: float) -> float:
    """Aspect ratio of the excentral circumcenter-centered inconic."""
    return (1.0 + math.sqrt(1.0 - 2.0 * rho)) / rho - 1.0


def macbeath_inconic_ratio(rho: float) -> float:
    """Aspect ratio of the excentral MacBeath inconic."""
    return 1.0 / math.sqrt(2.0 * rho)
