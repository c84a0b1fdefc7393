"""
The poristic family and its circumbilliard aspect ratio
=======================================================

Triangles sharing a fixed incircle and circumcircle form a
one-parameter family (Poncelet closure for two circles under Euler's
relation).  Their inradius-to-circumradius ratio rho is constant by
construction, and the aspect ratio of their circumbilliards is an
invariant with a closed form in rho.
"""
import math

import numpy as np

from orbitconics import (
    BilliardShape,
    PoristicShape,
    circumbilliard,
    inradius_to_circumradius,
    poristic_cb_aspect,
    poristic_triangle,
)

ps = PoristicShape(r=0.3625, R=1.0)
print(f"family with r={ps.r}, R={ps.R}: rho={ps.rho}, |X1 X3| = d = {ps.d:.6f}\n")

aspects, x9s = [], []
for k in range(360):
    theta = (k + 0.5) * 2 * math.pi / 360
    tri = poristic_triangle(ps, theta)
    res = circumbilliard(tri)
    aspects.append(res.aspect)
    x9s.append(res.mittenpunkt)

aspects = np.array(aspects)
print("aspect over 360 family members:")
print("  mean:       ", aspects.mean())
print("  spread:     ", aspects.max() - aspects.min())
print("  closed form:", poristic_cb_aspect(ps))

# the Mittenpunkt wanders, but on a perfect circle
xs = np.array([p.x for p in x9s])
ys = np.array([p.y for p in x9s])
M = np.column_stack([xs, ys, np.ones_like(xs)])
sol, *_ = np.linalg.lstsq(M, -(xs**2 + ys**2), rcond=None)
cx, cy = -sol[0] / 2, -sol[1] / 2
radius = math.sqrt(cx * cx + cy * cy - sol[2])
rms = math.sqrt(np.mean((np.hypot(xs - cx, ys - cy) - radius) ** 2))
print(f"\nMittenpunkt locus: circle center=({cx:.9f}, {cy:.9f}) radius={radius:.9f}")
print(f"circle-fit rms: {rms:.2e}")

# closing the loop with the billiard family: the orbit family of an
# (a, b) billiard has a fixed rho, and feeding that rho back into the
# poristic formula returns exactly a/b.
shape = BilliardShape(1.5, 1.0)
rho = inradius_to_circumradius(shape)
print(f"\nbilliard a/b=1.5 has rho={rho:.9f};")
print(f"poristic aspect at that rho: {poristic_cb_aspect(PoristicShape(rho, 1.0)):.12f}")
