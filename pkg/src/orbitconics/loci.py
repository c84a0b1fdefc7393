"""Center-locus sweeps, zero-centered ellipse fits, invariant reports.

A locus is sampled on a uniform parameter grid offset by half a step
(so exact isosceles configurations, where several derived conics
degenerate, are never hit).  Classification fits the two-parameter
model A x^2 + B y^2 = 1 by least squares; the verdict compares the rms
algebraic residual against the mean sample radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import centers
from .billiard import BilliardShape, ShapeClass, inradius_to_circumradius, orbit
from .circumbilliard import circumbilliard, derived_triangle
from .errors import IllConditioned, OrbitConicsError
from .kernel import Point, solve_linear

ELLIPTIC_RMS = 1e-8
NON_ELLIPTIC_RMS = 1e-4


class Verdict(Enum):
    ELLIPTIC = "elliptic"
    NON_ELLIPTIC = "non-elliptic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LocusFitReport:
    samples: list[Point]
    fit_A: float
    fit_B: float
    rms_residual: float
    verdict: Verdict
    fitted_axes: tuple[float, float] | None

    @property
    def mean_radius(self) -> float:
        return float(np.mean([p.norm() for p in self.samples]))


@dataclass(frozen=True)
class LocusSweep:
    points: list[Point]
    t_values: list[float]
    shape_classes: list[ShapeClass]
    skipped: list[tuple[float, str]] = field(default_factory=list)


def sample_grid(n: int) -> np.ndarray:
    """n parameters uniform on the circle, offset by half a step."""
    return (np.arange(n) + 0.5) * (2.0 * math.pi / n)


def sweep_locus(
    shape: BilliardShape,
    center_id,
    derived: str | None = None,
    n: int = 720,
) -> LocusSweep:
    """Positions of a center over the orbit family.

    ``center_id`` is a supported Kimberling index, the orthic-center
    selector, or the string "vertices" to collect the (derived)
    triangle's vertices themselves.  Samples whose derived construction
    degenerates are skipped and reported.
    """
    if n < 8:
        raise ValueError("need at least 8 samples")
    points: list[Point] = []
    t_values: list[float] = []
    classes: list[ShapeClass] = []
    skipped: list[tuple[float, str]] = []
    for t in sample_grid(n):
        sample = orbit(shape, float(t))
        tri = sample.triangle
        try:
            if center_id == "vertices":
                target = derived_triangle(tri, derived) if derived else tri
                new_points = list(target.vertices)
            elif derived is None:
                new_points = [centers.center(tri, center_id)]
            elif derived == "orthic" and center_id == centers.ORTHIC_CB_CENTER:
                # the orthic-CB center rule already lives on the reference
                new_points = [centers.orthic_cb_center(tri)]
            else:
                new_points = [centers.center(derived_triangle(tri, derived), center_id)]
        except OrbitConicsError as exc:
            skipped.append((float(t), type(exc).__name__))
            continue
        points.extend(new_points)
        t_values.extend([float(t)] * len(new_points))
        classes.extend([sample.shape_class] * len(new_points))
    return LocusSweep(points, t_values, classes, skipped)


def fit_locus(samples) -> LocusFitReport:
    """Least-squares fit of A x^2 + B y^2 = 1 through the samples."""
    pts = [p if isinstance(p, Point) else Point(p[0], p[1]) for p in samples]
    if len(pts) < 8:
        raise ValueError("need at least 8 samples")
    x2 = np.array([p.x * p.x for p in pts])
    y2 = np.array([p.y * p.y for p in pts])
    normal = [[float(np.sum(x2 * x2)), float(np.sum(x2 * y2))],
              [float(np.sum(x2 * y2)), float(np.sum(y2 * y2))]]
    rhs = [float(np.sum(x2)), float(np.sum(y2))]
    A, B = solve_linear(normal, rhs, exc=IllConditioned)
    res = A * x2 + B * y2 - 1.0
    rms = float(np.sqrt(np.mean(res * res)))
    mean_radius = float(np.mean(np.sqrt(x2 + y2)))
    if A > 0.0 and B > 0.0:
        axes = (1.0 / math.sqrt(A), 1.0 / math.sqrt(B))
        if rms <= ELLIPTIC_RMS * mean_radius:
            verdict = Verdict.ELLIPTIC
        elif rms >= NON_ELLIPTIC_RMS * mean_radius:
            verdict = Verdict.NON_ELLIPTIC
        else:
            verdict = Verdict.INCONCLUSIVE
    else:
        axes = None
        verdict = Verdict.NON_ELLIPTIC
    return LocusFitReport(pts, float(A), float(B), rms, verdict, axes)


def fit_by_shape_class(sweep: LocusSweep) -> dict[str, LocusFitReport]:
    """Per-piece fits of a sweep partitioned by orbit shape class.

    Needed for the orthic-center locus above the obtuse threshold,
    where the locus splits into acute and obtuse pieces.
    """
    out: dict[str, LocusFitReport] = {}
    for cls in (ShapeClass.ACUTE, ShapeClass.OBTUSE):
        pts = [p for p, c in zip(sweep.points, sweep.shape_classes) if c is cls]
        if len(pts) >= 8:
            out[cls.value] = fit_locus(pts)
    return out


@dataclass(frozen=True)
class QuantityStats:
    name: str
    minimum: float
    maximum: float
    spread: float
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "min": self.minimum,
            "max": self.maximum,
            "spread": self.spread,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class InvariantReport:
    a: float
    b: float
    n: int
    rho_closed_form: float
    rho_mean: float
    entries: list[QuantityStats]

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "rho_closed_form": self.rho_closed_form,
            "rho_mean": self.rho_mean,
            "all_passed": self.all_passed,
            "checks": [e.as_dict() for e in self.entries],
        }


def _rel_spread_stats(name: str, values, tol: float) -> QuantityStats:
    lo, hi = float(np.min(values)), float(np.max(values))
    spread = (hi - lo) / abs(float(np.mean(values)))
    return QuantityStats(name, lo, hi, spread, tol, spread <= tol)


def invariant_report(shape: BilliardShape, n: int = 720) -> InvariantReport:
    """Family-invariance statistics over n orbit samples.

    Checks the perimeter, the inradius-to-circumradius ratio (against
    its closed form), the stationarity of the Mittenpunkt, and the
    constancy and axis alignment of the anticomplementary and medial
    circumbilliards.
    """
    perimeter, rho, x9n = [], [], []
    act_major, act_minor, med_major, med_minor, angles = [], [], [], [], []
    for t in sample_grid(n):
        tri = orbit(shape, float(t)).triangle
        perimeter.append(tri.perimeter())
        rho.append(tri.inradius() / tri.circumradius())
        x9n.append(centers.center(tri, 9).norm())
        cb_act = circumbilliard(centers.act(tri))
        cb_med = circumbilliard(centers.medial(tri))
        act_major.append(cb_act.params.semi_major)
        act_minor.append(cb_act.params.semi_minor)
        med_major.append(cb_med.params.semi_major)
        med_minor.append(cb_med.params.semi_minor)
        for ang in (cb_act.params.axis_angle, cb_med.params.axis_angle):
            angles.append(min(ang % math.pi, math.pi - (ang % math.pi)))
    rho_form = inradius_to_circumradius(shape)
    entries = [
        _rel_spread_stats("perimeter", perimeter, 1e-9),
        _rel_spread_stats("inradius_to_circumradius", rho, 1e-9),
        QuantityStats(
            "rho_matches_closed_form",
            float(np.min(rho)) - rho_form,
            float(np.max(rho)) - rho_form,
            abs(float(np.mean(rho)) - rho_form),
            1e-9,
            abs(float(np.mean(rho)) - rho_form) <= 1e-9,
        ),
        QuantityStats(
            "mittenpunkt_norm",
            float(np.min(x9n)),
            float(np.max(x9n)),
            float(np.max(x9n)),
            1e-9 * shape.a,
            float(np.max(x9n)) <= 1e-9 * shape.a,
        ),
        _rel_spread_stats("act_cb_semi_major", act_major, 1e-9),
        _rel_spread_stats("act_cb_semi_minor", act_minor, 1e-9),
        _rel_spread_stats("medial_cb_semi_major", med_major, 1e-9),
        _rel_spread_stats("medial_cb_semi_minor", med_minor, 1e-9),
        QuantityStats(
            "cb_axis_alignment",
            0.0,
            float(np.max(angles)),
            float(np.max(angles)),
            1e-9,
            float(np.max(angles)) <= 1e-9,
        ),
    ]
    return InvariantReport(
        shape.a, shape.b, n, rho_form, float(np.mean(rho)), entries
    )
