"""
Loci of triangle centers over the orbit family
==============================================

Sweeping a triangle center over the one-parameter orbit family traces a
curve.  Some centers trace ellipses (X1, X7, X142, the excenters), some
do not (X6, X168).  A least-squares fit of a zero-centered axis-aligned
ellipse separates the two cases, and for the elliptic ones the fitted
axes match closed forms.

Writes each sampled locus to CSV and an SVG picture with the billiard
and caustic overlaid.
"""
import csv
import os

from orbitconics import BilliardShape, caustic, fit_locus, sweep_locus
from orbitconics.svgout import render_svg

shape = BilliardShape(1.5, 1.0)
k = (2 * shape.delta - shape.a**2 - shape.b**2) / shape.c2
print(f"billiard a/b = {shape.alpha}, similarity factor k = {k:.9f}\n")

out_dir = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(out_dir, exist_ok=True)

cases = [
    (1, None, "incenter"),
    (7, None, "gergonne point (elliptic, axes k*(a,b))"),
    (142, None, "medial-CB center (elliptic, axes k*(a,b)/2)"),
    (6, None, "symmedian point (convex quartic)"),
    (168, None, "excentral-CB center (non-elliptic)"),
    ("vertices", "excentral", "excenters"),
]

for center_id, derived, label in cases:
    sweep = sweep_locus(shape, center_id, derived=derived, n=720)
    report = fit_locus(sweep.points)
    axes = (
        f"axes=({report.fitted_axes[0]:.9f}, {report.fitted_axes[1]:.9f})"
        if report.fitted_axes
        else "axes=n/a"
    )
    print(
        f"{str(center_id):>8s} {label:45s} {report.verdict.value:14s} "
        f"rms/scale={report.rms_residual / report.mean_radius:.2e} {axes}"
    )

    name = f"locus_{center_id}" if derived is None else f"locus_{derived}_{center_id}"
    csv_path = os.path.join(out_dir, f"{name}.csv")
    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["t", "x", "y"])
        for t, p in zip(sweep.t_values, sweep.points):
            writer.writerow([repr(t), repr(p.x), repr(p.y)])
    caus = caustic(shape)
    svg = render_svg(
        [p.as_tuple() for p in sweep.points],
        overlays=[(shape.a, shape.b), (caus.semi_major, caus.semi_minor)],
    )
    with open(os.path.join(out_dir, f"{name}.svg"), "w") as handle:
        handle.write(svg)

print(f"\nCSV and SVG files written to {out_dir}/")
