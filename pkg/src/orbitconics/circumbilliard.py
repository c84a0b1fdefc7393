"""Circumbilliard construction for arbitrary and derived triangles.

The circumbilliard of a triangle is the unique circumellipse centered
on its Mittenpunkt; the triangle is then a billiard orbit of that
ellipse (the boundary normal at each vertex bisects the vertex angle).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import centers
from .billiard import BilliardShape, orbit
from .kernel import (
    Conic,
    EllipseParams,
    Point,
    Triangle,
    conic_eval,
    conic_to_ellipse_params,
    solve_circumconic,
)

DERIVED_TRIANGLES = ("excentral", "act", "medial", "orthic")

#: Expected circumbilliard center of each derived triangle, as a center
#: id of the reference triangle.
DERIVED_CB_CENTER = {
    "excentral": 168,
    "act": 7,
    "medial": 142,
    "orthic": centers.ORTHIC_CB_CENTER,
}


@dataclass(frozen=True)
class CircumbilliardResult:
    conic: Conic
    params: EllipseParams
    mittenpunkt: Point

    @property
    def aspect(self) -> float:
        return self.params.aspect


def circumbilliard(t: Triangle) -> CircumbilliardResult:
    """Unique circumellipse of ``t`` centered on its Mittenpunkt."""
    x9 = centers.center(t, 9)
    conic = solve_circumconic(t, x9)
    params = conic_to_ellipse_params(conic)
    return CircumbilliardResult(conic, params, x9)


def derived_triangle(t: Triangle, which: str) -> Triangle:
    if which == "excentral":
        return centers.excentral(t)
    if which == "act":
        return centers.act(t)
    if which == "medial":
        return centers.medial(t)
    if which == "orthic":
        return centers.orthic(t)
    raise KeyError(f"unknown derived triangle {which!r}")


def derived_cb(t: Triangle, which: str) -> CircumbilliardResult:
    """Circumbilliard of a derived triangle of ``t``.

    Its center coincides with a named center of the reference triangle:
    excentral -> X168, act -> X7, medial -> X142, orthic -> X6*.
    """
    return circumbilliard(derived_triangle(t, which))


def reflection_residual(conic: Conic, t: Triangle) -> float:
    """Largest angle between a conic normal and the vertex-angle bisector.

    Zero (to rounding) exactly when ``t`` is a billiard orbit of the
    conic; radians.
    """
    worst = 0.0
    verts = t.vertices
    for i in range(3):
        p, q, r = verts[i], verts[(i + 1) % 3], verts[(i + 2) % 3]
        g = conic.gradient(p)
        g = g / g.norm()
        u = (q - p) / q.dist(p)
        v = (r - p) / r.dist(p)
        bis = u + v
        bis = bis / bis.norm()
        worst = max(worst, math.asin(min(1.0, abs(bis.cross(g)))))
    return worst


def intouch_points(t: Triangle) -> tuple[Point, Point, Point]:
    """Incircle tangency points, as perpendicular feet from the incenter."""
    inc = centers.center(t, 1)
    out = []
    verts = t.vertices
    for i in range(3):
        q, r = verts[(i + 1) % 3], verts[(i + 2) % 3]
        d = r - q
        out.append(q + ((inc - q).dot(d) / d.dot(d)) * d)
    return tuple(out)


@dataclass(frozen=True)
class SuperpositionReport:
    act_on_billiard: float
    reference_on_medial_cb: float


def intouch_superposition_check(shape: BilliardShape, t: float) -> SuperpositionReport:
    """Residuals of two superposition facts for the orbit at parameter t.

    The intouch points of the anticomplementary triangle lie on the
    billiard boundary, and the intouch points of the orbit itself lie
    on the medial triangle's circumbilliard.
    """
    tri = orbit(shape, t).triangle
    act_touch = intouch_points(centers.act(tri))
    res_act = max(abs(shape.boundary_value(p)) for p in act_touch)
    medial_cb = derived_cb(tri, "medial")
    scale = 1.0 + medial_cb.conic.coeff_norm()
    res_med = max(
        abs(conic_eval(medial_cb.conic, p)) / scale for p in intouch_points(tri)
    )
    return SuperpositionReport(res_act, res_med)
