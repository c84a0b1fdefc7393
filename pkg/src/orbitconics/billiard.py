"""Elliptic billiard stage: triangle orbits, caustic, shape thresholds.

An orbit triangle with one vertex pinned at ``(a cos t, b sin t)`` is
built in closed form: the two orbit sides leaving the pinned vertex are
the tangent lines to the confocal caustic, and each meets the boundary
at one further point.  Closure of the third side (and the reflection
law at every vertex) then holds by the Poncelet porism and doubles as a
numerical correctness monitor in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from .errors import InvalidShape
from .kernel import Conic, EllipseParams, Point, Triangle

# Cosine dead band separating acute / right / obtuse.
RIGHT_DEADBAND = 1e-12


class ShapeClass(Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


@dataclass(frozen=True)
class BilliardShape:
    """Billiard boundary (x/a)^2 + (y/b)^2 = 1 with a > b > 0."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > self.b > 0.0):
            raise InvalidShape(f"require a > b > 0, got a={self.a}, b={self.b}")

    @cached_property
    def delta(self) -> float:
        return math.sqrt(self.a**4 - self.a**2 * self.b**2 + self.b**4)

    @property
    def c2(self) -> float:
        """Squared half focal distance a^2 - b^2."""
        return self.a**2 - self.b**2

    @property
    def alpha(self) -> float:
        return self.a / self.b

    def boundary_point(self, t: float) -> Point:
        return Point(self.a * math.cos(t), self.b * math.sin(t))

    def boundary_value(self, p: Point) -> float:
        """(x/a)^2 + (y/b)^2 - 1; zero on the boundary."""
        return (p.x / self.a) ** 2 + (p.y / self.b) ** 2 - 1.0

    def conic(self) -> Conic:
        return Conic(0.0, 0.0, 0.0, -1.0 / self.a**2, -1.0 / self.b**2)

    def ellipse_params(self) -> EllipseParams:
        return EllipseParams(Point(0.0, 0.0), self.a, self.b, 0.0)

    def normal_direction(self, p: Point) -> Point:
        g = Point(p.x / self.a**2, p.y / self.b**2)
        return g / g.norm()


@dataclass(frozen=True)
class OrbitSample:
    t: float
    triangle: Triangle
    shape_class: ShapeClass


def caustic(shape: BilliardShape) -> EllipseParams:
    """Confocal ellipse tangent to every orbit side.

    This is the family's stationary Mandart inellipse, centered on the
    stationary Mittenpunkt at the origin.
    """
    a, b, d, c2 = shape.a, shape.b, shape.delta, shape.c2
    return EllipseParams(
        Point(0.0, 0.0),
        a * (d - b * b) / c2,
        b * (a * a - d) / c2,
        0.0,
    )


def classify_triangle(t: Triangle) -> ShapeClass:
    """Acute / right / obtuse from the sign of the largest-angle cosine."""
    cmin = min(t.cosines())
    if cmin < -RIGHT_DEADBAND:
        return ShapeClass.OBTUSE
    if cmin <= RIGHT_DEADBAND:
        return ShapeClass.RIGHT
    return ShapeClass.ACUTE


def orbit(shape: BilliardShape, t: float) -> OrbitSample:
    """Orbit triangle with first vertex at (a cos t, b sin t).

    The second vertex is the nearer bounce in increasing boundary
    parameter, the third the farther one, so the vertices wind
    counterclockwise for every t.
    """
    p1 = shape.boundary_point(t)
    caus = caustic(shape)
    ac2, bc2 = caus.semi_major**2, caus.semi_minor**2
    x1, y1 = p1.x, p1.y
    S = np.array([[ac2 - x1 * x1, -x1 * y1], [-x1 * y1, bc2 - y1 * y1]])
    w, V = np.linalg.eigh(S)
    partners = []
    for sign in (1.0, -1.0):
        n = math.sqrt(-w[0]) * V[:, 1] + sign * math.sqrt(w[1]) * V[:, 0]
        u = Point(-n[1], n[0])
        qa = u.x**2 / shape.a**2 + u.y**2 / shape.b**2
        qb = 2.0 * (p1.x * u.x / shape.a**2 + p1.y * u.y / shape.b**2)
        q = p1 + (-qb / qa) * u
        forward = (math.atan2(q.y / shape.b, q.x / shape.a) - t) % (2.0 * math.pi)
        partners.append((forward, q))
    partners.sort(key=lambda z: z[0])
    tri = Triangle(p1, partners[0][1], partners[1][1])
    return OrbitSample(t, tri, classify_triangle(tri))


def classify_orbit(shape: BilliardShape, t: float) -> ShapeClass:
    return orbit(shape, t).shape_class


def obtuse_threshold() -> float:
    """Aspect ratio a/b above which the orbit family contains obtuse triangles."""
    return math.sqrt(2.0 * math.sqrt(2.0) - 1.0)


def equilateral_orthic_threshold() -> float:
    """Aspect ratio a/b whose upright isosceles orbit has an equilateral orthic.

    The only positive root of u^4 + 6 u^2 - 39.
    """
    return math.sqrt(4.0 * math.sqrt(3.0) - 3.0)


def right_angle_vertex(shape: BilliardShape) -> Point:
    """Boundary point in the first quadrant whose orbit is a right triangle.

    The four symmetric copies (+-x, +-y) bound the top and bottom
    boundary arcs on which a vertex makes the orbit obtuse.  Only exists
    for a/b above the obtuse threshold.
    """
    a2, b2, d = shape.a**2, shape.b**2, shape.delta
    rx = a2 * a2 + 3 * b2 * b2 - 4 * b2 * d
    ry = -b2 * b2 - 3 * a2 * a2 + 4 * a2 * d
    if rx < 0.0 or ry < 0.0:
        raise InvalidShape("no right-triangle configuration below the obtuse threshold")
    c3 = shape.c2**1.5
    return Point(a2 * math.sqrt(rx) / c3, b2 * math.sqrt(ry) / c3)


def orthic_center_transition(shape: BilliardShape) -> Point:
    """First-quadrant branch point of the orthic-circumbilliard center locus.

    Computed as the midpoint of the right-angle vertex's altitude of the
    right-triangle orbit, the common limit of the acute and obtuse rules.
    """
    p = right_angle_vertex(shape)
    t = math.atan2(p.y / shape.b, p.x / shape.a)
    tri = orbit(shape, t).triangle
    i = min(range(3), key=lambda k: abs(tri.cosines()[k]))
    verts = tri.vertices
    pv, q, r = verts[i], verts[(i + 1) % 3], verts[(i + 2) % 3]
    d = r - q
    foot = q + ((pv - q).dot(d) / d.dot(d)) * d
    return 0.5 * (pv + foot)


def isosceles_dimensions(shape: BilliardShape) -> tuple[float, float]:
    """Base half-width and height of the upright isosceles orbit, in b = 1 units."""
    al = shape.alpha
    al2 = al * al
    dn = math.sqrt(al2 * al2 - al2 + 1.0)
    s_eq = al2 / (al2 - 1.0) * math.sqrt(2.0 * dn - al2 - 1.0)
    h = (al2 + dn + 1.0) / (al2 + dn)
    return s_eq, h


def inradius_to_circumradius(shape: BilliardShape) -> float:
    """The family-invariant ratio r/R, as a closed form in (a, b)."""
    a2, b2, d = shape.a**2, shape.b**2, shape.delta
    return 2.0 * (d - b2) * (a2 - d) / shape.c2**2
