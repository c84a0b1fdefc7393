"""
Inconics of the excentral triangle
==================================

Two inconics of the excentral triangle have semi-axes that are closed
forms in the reference triangle's inradius r and circumradius R (with
d = sqrt(R (R - 2r))): the one centered on the excentral circumcenter
has semi-axes (R + d, R - d), and the excentral MacBeath inconic has
(R, sqrt(R^2 - d^2)).  The first is a quarter-turn copy of the
incenter-centered circumconic.  The axes vary over the orbit family but
each ratio stays fixed.
"""
import math

from orbitconics import (
    BilliardShape,
    center,
    conic_to_ellipse_params,
    excentral,
    excentral_inconic_axes,
    macbeath_inconic_ratio,
    orbit,
    solve_circumconic,
    solve_inconic,
    x3_inconic_ratio,
)

shape = BilliardShape(1.5, 1.0)

print(f"{'t':>5s} {'(R+d, R-d)':>30s} {'dual solver':>30s}")
for t in (0.3, 0.9, 1.4, 2.0):
    tri = orbit(shape, t).triangle
    exc = excentral(tri)
    major, minor = excentral_inconic_axes(tri, "x3")
    params = conic_to_ellipse_params(solve_inconic(exc, center(tri, 40)))
    print(
        f"{t:5.2f} ({major:13.9f}, {minor:13.9f}) "
        f"({params.semi_major:13.9f}, {params.semi_minor:13.9f})"
    )

tri = orbit(shape, 0.9).triangle
exc = excentral(tri)
rho = tri.inradius() / tri.circumradius()

print("\nratios (constant over the family):")
print("  circumcenter-centered:", x3_inconic_ratio(rho))
print("  macbeath:             ", macbeath_inconic_ratio(rho))

macb = conic_to_ellipse_params(solve_inconic(exc, center(exc, 5)))
print("\nMacBeath inconic at t=0.9:")
print("  axes:", (macb.semi_major, macb.semi_minor))
print("  closed form:", excentral_inconic_axes(tri, "macbeath"))
print("  axis angle (deg):", math.degrees(macb.axis_angle), " (askew, varies with t)")

inc3 = conic_to_ellipse_params(solve_inconic(exc, center(tri, 40)))
circ1 = conic_to_ellipse_params(solve_circumconic(tri, center(tri, 1)))
print("\nquarter-turn twin check:")
print("  excentral inconic axes:   ", (inc3.semi_major, inc3.semi_minor))
print("  incenter circumconic axes:", (circ1.semi_major, circ1.semi_minor))
print(
    "  angle difference (deg):   ",
    math.degrees((inc3.axis_angle - circ1.axis_angle) % math.pi),
)
