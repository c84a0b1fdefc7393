"""Minimal SVG output for locus curves with optional ellipse overlays."""

from __future__ import annotations

import math


def _fmt(x: float) -> str:
    return repr(float(x))


def _ellipse_path(a: float, b: float, n: int = 256) -> str:
    pts = [
        (a * math.cos(2 * math.pi * k / n), -b * math.sin(2 * math.pi * k / n))
        for k in range(n)
    ]
    body = " L".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts)
    return f"M{body} Z"


def render_svg(
    points,
    overlays: list[tuple[float, float]] | None = None,
    width: int = 720,
) -> str:
    """SVG document with the points as a polyline, y axis upward, 1:1 aspect.

    ``overlays`` is a list of (semi_axis_x, semi_axis_y) ellipses drawn
    dashed and centered on the origin.  The view box fits the data and
    overlays with a 5% margin.
    """
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    for (oa, ob) in overlays or []:
        xs.extend([-oa, oa])
        ys.extend([-ob, ob])
    if not xs:
        xs = ys = [-1.0, 1.0]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    margin = 0.05 * max(xmax - xmin, ymax - ymin, 1e-9)
    xmin, xmax = xmin - margin, xmax + margin
    ymin, ymax = ymin - margin, ymax + margin
    w, h = xmax - xmin, ymax - ymin
    height = int(round(width * h / w))
    stroke = 0.004 * max(w, h)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" '
        f'viewBox="{_fmt(xmin)} {_fmt(-ymax)} {_fmt(w)} {_fmt(h)}">',
    ]
    for (oa, ob) in overlays or []:
        lines.append(
            f'<path d="{_ellipse_path(oa, ob)}" fill="none" stroke="black" '
            f'stroke-width="{_fmt(stroke)}" stroke-dasharray="{_fmt(3 * stroke)},{_fmt(2 * stroke)}"/>'
        )
    if points:
        body = " ".join(f"{_fmt(p[0])},{_fmt(-p[1])}" for p in points)
        lines.append(
            f'<polyline points="{body}" fill="none" stroke="crimson" '
            f'stroke-width="{_fmt(stroke)}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
