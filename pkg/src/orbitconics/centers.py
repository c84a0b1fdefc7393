"""Triangle centers (Kimberling X_i) and derived triangles.

Centers are specified by trilinear coordinates and converted to
Cartesians through sidelength weighting.  Angle-based trilinears (cos,
sec, cos of angle differences) are always computed from sidelengths via
the law of cosines.  A handful of centers are composite: they are
defined as a named center of a derived triangle or as an affine
combination of other centers.
"""

from __future__ import annotations

import math

from .errors import DegenerateTriangle, PointAtInfinity, RightTriangle, UndefinedForShape
from .kernel import Point, Triangle

# Largest-angle cosine dead band for acute/right/obtuse branch switches.
RIGHT_DEADBAND = 1e-12

#: Kimberling indices with a direct or composite rule below.
SUPPORTED_CENTERS = frozenset(
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 40, 69, 100, 142, 144, 168, 1156}
)

#: Selector for the orthic-circumbilliard center (acute: X6; obtuse: X6 of
#: the triangle spanned by the two non-obtuse vertices and the orthocenter).
ORTHIC_CB_CENTER = "X6star"


def trilinear_to_cartesian(t: Triangle, tri: tuple[float, float, float]) -> Point:
    """Cartesian position of homogeneous trilinears (t1 : t2 : t3)."""
    s1, s2, s3 = t.sidelengths()
    w1, w2, w3 = s1 * tri[0], s2 * tri[1], s3 * tri[2]
    den = w1 + w2 + w3
    if abs(den) <= 1e-12 * (abs(w1) + abs(w2) + abs(w3)):
        raise PointAtInfinity("trilinears lie on the line at infinity")
    return (w1 * t.p1 + w2 * t.p2 + w3 * t.p3) / den


def _sines(cos_a: float, cos_b: float, cos_c: float) -> tuple[float, float, float]:
    return (
        math.sqrt(max(1.0 - cos_a * cos_a, 0.0)),
        math.sqrt(max(1.0 - cos_b * cos_b, 0.0)),
        math.sqrt(max(1.0 - cos_c * cos_c, 0.0)),
    )


def _direct_trilinears(t: Triangle, index: int) -> tuple[float, float, float]:
    s1, s2, s3 = t.sidelengths()
    if index == 1:
        return (1.0, 1.0, 1.0)
    if index == 2:
        return (1.0 / s1, 1.0 / s2, 1.0 / s3)
    if index == 6:
        return (s1, s2, s3)
    if index == 7:
        return (
            1.0 / (s1 * (s2 + s3 - s1)),
            1.0 / (s2 * (s3 + s1 - s2)),
            1.0 / (s3 * (s1 + s2 - s3)),
        )
    if index == 8:
        return ((s2 + s3 - s1) / s1, (s3 + s1 - s2) / s2, (s1 + s2 - s3) / s3)
    if index == 9:
        return (s2 + s3 - s1, s3 + s1 - s2, s1 + s2 - s3)
    if index == 10:
        return ((s2 + s3) / s1, (s3 + s1) / s2, (s1 + s2) / s3)
    if index == 1156:
        return (
            1.0 / ((s2 - s3) ** 2 + s1 * (s2 + s3 - 2 * s1)),
            1.0 / ((s3 - s1) ** 2 + s2 * (s3 + s1 - 2 * s2)),
            1.0 / ((s1 - s2) ** 2 + s3 * (s1 + s2 - 2 * s3)),
        )
    ca, cb, cc = t.cosines()
    if index == 3:
        return (ca, cb, cc)
    if index == 4:
        if min(abs(ca), abs(cb), abs(cc)) < 1e-15:
            raise UndefinedForShape("orthocenter of a right triangle is at a vertex-altitude limit")
        return (1.0 / ca, 1.0 / cb, 1.0 / cc)
    if index == 5:
        sa, sb, sc = _sines(ca, cb, cc)
        return (cb * cc + sb * sc, cc * ca + sc * sa, ca * cb + sa * sb)
    if index == 11:
        sa, sb, sc = _sines(ca, cb, cc)
        return (
            1.0 - (cb * cc + sb * sc),
            1.0 - (cc * ca + sc * sa),
            1.0 - (ca * cb + sa * sb),
        )
    raise KeyError(index)


def center(t: Triangle, center_id) -> Point:
    """Cartesian position of a supported triangle center.

    ``center_id`` is a Kimberling index from SUPPORTED_CENTERS or the
    string ORTHIC_CB_CENTER.
    """
    if center_id == ORTHIC_CB_CENTER:
        return orthic_cb_center(t)
    index = int(center_id)
    if index not in SUPPORTED_CENTERS:
        raise KeyError(f"center X{index} not supported")
    if index == 40:
        return center(excentral(t), 3)
    if index == 69:
        return center(act(t), 6)
    if index == 100:
        return 2.0 * center(t, 9) - center(t, 1156)
    if index == 142:
        return 0.5 * (center(t, 9) + center(t, 7))
    if index == 144:
        return 3.0 * center(t, 2) - 2.0 * center(t, 7)
    if index == 168:
        return center(excentral(t), 9)
    return trilinear_to_cartesian(t, _direct_trilinears(t, index))


def excentral(t: Triangle) -> Triangle:
    """Triangle of the three excenters."""
    s1, s2, s3 = t.sidelengths()
    p1, p2, p3 = t.vertices
    e1 = (-s1 * p1 + s2 * p2 + s3 * p3) / (s2 + s3 - s1)
    e2 = (s1 * p1 - s2 * p2 + s3 * p3) / (s3 + s1 - s2)
    e3 = (s1 * p1 + s2 * p2 - s3 * p3) / (s1 + s2 - s3)
    return Triangle(e1, e2, e3)


def medial(t: Triangle) -> Triangle:
    """Triangle of the side midpoints."""
    return Triangle(
        0.5 * (t.p2 + t.p3),
        0.5 * (t.p3 + t.p1),
        0.5 * (t.p1 + t.p2),
    )


def act(t: Triangle) -> Triangle:
    """Anticomplementary triangle: vertex i maps to p_j + p_k - p_i."""
    return Triangle(
        t.p2 + t.p3 - t.p1,
        t.p3 + t.p1 - t.p2,
        t.p1 + t.p2 - t.p3,
    )


def _altitude_foot(t: Triangle, i: int) -> Point:
    verts = t.vertices
    p, q, r = verts[i], verts[(i + 1) % 3], verts[(i + 2) % 3]
    d = r - q
    return q + ((p - q).dot(d) / d.dot(d)) * d


def orthic(t: Triangle) -> Triangle:
    """Triangle of the altitude feet.

    Raises RightTriangle when an angle is right within the dead band,
    since two feet then coincide with the right-angle vertex.
    """
    nearest_right = min(t.cosines(), key=abs)
    if abs(nearest_right) <= RIGHT_DEADBAND:
        raise RightTriangle("orthic of a right triangle collapses to a segment")
    try:
        return Triangle(*(_altitude_foot(t, i) for i in range(3)))
    except DegenerateTriangle as exc:
        raise RightTriangle("orthic numerically degenerate") from exc


def orthic_cb_center(t: Triangle, return_branch: bool = False):
    """Center of the orthic triangle's circumbilliard (symbolic X6*).

    Acute triangles: the symmedian point X6 of ``t``.  Triangles obtuse
    at vertex P: X6 of the triangle spanned by the other two vertices
    and the orthocenter.  Right triangles (within the dead band): the
    two branches share the limit value, the midpoint of the altitude
    from the right-angle vertex, which is returned flagged as "right".
    """
    cos_vals = t.cosines()
    i = min(range(3), key=lambda k: cos_vals[k])
    cmin = cos_vals[i]
    if cmin > RIGHT_DEADBAND:
        point, branch = center(t, 6), "acute"
    elif cmin < -RIGHT_DEADBAND:
        verts = t.vertices
        t2 = Triangle(verts[(i + 1) % 3], verts[(i + 2) % 3], center(t, 4))
        point, branch = center(t2, 6), "obtuse"
    else:
        point, branch = 0.5 * (t.vertices[i] + _altitude_foot(t, i)), "right"
    if return_branch:
        return point, branch
    return point
