"""
Circumbilliards of derived triangles
====================================

For an orbit triangle of the elliptic billiard, the excentral, medial,
anticomplementary and orthic triangles each carry their own
circumbilliard.  Their centers land on named triangle centers of the
reference triangle, and the anticomplementary and medial ones stay
axis-aligned with fixed axes over the whole family.
"""
import math

from orbitconics import BilliardShape, center, derived_cb, orbit, orthic_cb_center

shape = BilliardShape(1.618, 1.0)  # the golden billiard from the figures
tri = orbit(shape, math.radians(7.0)).triangle

expected = {
    "excentral": ("X168", lambda: center(tri, 168)),
    "act": ("X7", lambda: center(tri, 7)),
    "medial": ("X142", lambda: center(tri, 142)),
    "orthic": ("X6*", lambda: orthic_cb_center(tri)),
}

print(f"orbit at t=7 deg on the a/b={shape.alpha:.3f} billiard\n")
print(f"{'derived':10s} {'center':5s} {'axes':>28s}  {'angle(deg)':>10s}  offset")
for which, (label, expect) in expected.items():
    res = derived_cb(tri, which)
    p = res.params
    axes = f"({p.semi_major:.6f}, {p.semi_minor:.6f})"
    print(
        f"{which:10s} {label:5s} {axes:>28s}  {math.degrees(p.axis_angle):10.4f}"
        f"  {res.params.center.dist(expect()):.2e}"
    )

# The anticomplementary CB axes are exactly twice the billiard's, the
# medial CB axes exactly half, both constant over the family:
print("\naxes over a sweep (anticomplementary and medial):")
for t in (0.3, 1.0, 2.2):
    tri_t = orbit(shape, t).triangle
    act_p = derived_cb(tri_t, "act").params
    med_p = derived_cb(tri_t, "medial").params
    print(
        f"  t={t:3.1f}  act=({act_p.semi_major:.12f}, {act_p.semi_minor:.12f})"
        f"  medial=({med_p.semi_major:.12f}, {med_p.semi_minor:.12f})"
    )
print("  billiard doubled:", (2 * shape.a, 2 * shape.b))
print("  billiard halved: ", (shape.a / 2, shape.b / 2))
