"""Independent numerical oracles used by the tests.

Everything here deliberately avoids the library's own construction
paths: the orbit oracle iterates the raw reflection map and solves the
closure condition by bisection, and the extremal-radius search measures
ellipse axes by brute force along rays.
"""

from __future__ import annotations

import math

import numpy as np


def reflection_map_orbit(a: float, b: float, t: float):
    """Orbit triangle via three reflections and bisection on closure.

    Returns the vertices as numpy arrays (P1, P2, P3) with P2 the first
    bounce in increasing boundary parameter.
    """
    a2, b2 = a * a, b * b

    def boundary(u):
        return np.array([a * math.cos(u), b * math.sin(u)])

    def chord_end(P, u):
        qa = u[0] ** 2 / a2 + u[1] ** 2 / b2
        qb = 2.0 * (P[0] * u[0] / a2 + P[1] * u[1] / b2)
        return P + (-qb / qa) * u

    def reflect(u, Q):
        n = np.array([Q[0] / a2, Q[1] / b2])
        n /= np.linalg.norm(n)
        return u - 2.0 * np.dot(u, n) * n

    def lifted(Q, prev):
        th = math.atan2(Q[1] / b, Q[0] / a)
        while th <= prev + 1e-15:
            th += 2.0 * math.pi
        return th

    def bounce3(psi):
        P = boundary(t)
        u = np.array([math.cos(psi), math.sin(psi)])
        th = t
        pts = []
        for _ in range(3):
            Q = chord_end(P, u)
            u = reflect(u, Q)
            th = lifted(Q, th)
            pts.append(Q)
            P = Q
        return th, pts

    tangent = math.atan2(b * math.cos(t), -a * math.sin(t))
    lo, hi = tangent + 1e-12, tangent + math.pi - 1e-12
    flo = bounce3(lo)[0] - (t + 2.0 * math.pi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = bounce3(mid)[0] - (t + 2.0 * math.pi)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    _, pts = bounce3(0.5 * (lo + hi))
    return boundary(t), pts[0], pts[1]


def extremal_radii(conic_coeffs, center, n: int = 2_000_000):
    """Max and min distance from the center to the conic along ray directions.

    Conic in the five-coefficient form; relies only on evaluating the
    restricted quadratic along each direction.
    """
    c1, c2, c3, c4, c5 = conic_coeffs
    cx, cy = center
    d0 = 1.0 + c1 * cx + c2 * cy + c3 * cx * cy + c4 * cx * cx + c5 * cy * cy
    theta = np.linspace(0.0, math.pi, n)
    ux, uy = np.cos(theta), np.sin(theta)
    d2 = c4 * ux * ux + c3 * ux * uy + c5 * uy * uy
    tt = np.sqrt(-d0 / d2)
    return float(tt.max()), float(tt.min())


def incircle(vertices):
    """Incenter and inradius from first principles."""
    P = [np.asarray(v, dtype=float) for v in vertices]
    s1 = np.linalg.norm(P[1] - P[2])
    s2 = np.linalg.norm(P[0] - P[2])
    s3 = np.linalg.norm(P[0] - P[1])
    I = (s1 * P[0] + s2 * P[1] + s3 * P[2]) / (s1 + s2 + s3)
    sp = 0.5 * (s1 + s2 + s3)
    area = math.sqrt(max(sp * (sp - s1) * (sp - s2) * (sp - s3), 0.0))
    return I, area / sp


def circumcircle(vertices):
    """Circumcenter and circumradius from perpendicular bisectors."""
    A, B, C = [np.asarray(v, dtype=float) for v in vertices]
    d = 2.0 * (A[0] * (B[1] - C[1]) + B[0] * (C[1] - A[1]) + C[0] * (A[1] - B[1]))
    ux = (
        (A @ A) * (B[1] - C[1]) + (B @ B) * (C[1] - A[1]) + (C @ C) * (A[1] - B[1])
    ) / d
    uy = (
        (A @ A) * (C[0] - B[0]) + (B @ B) * (A[0] - C[0]) + (C @ C) * (B[0] - A[0])
    ) / d
    O = np.array([ux, uy])
    return O, float(np.linalg.norm(A - O))
