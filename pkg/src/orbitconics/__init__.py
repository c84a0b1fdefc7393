"""Triangle families in elliptic billiards: circumbilliards, loci, invariants."""

from .billiard import (
    BilliardShape,
    OrbitSample,
    ShapeClass,
    caustic,
    classify_orbit,
    classify_triangle,
    equilateral_orthic_threshold,
    inradius_to_circumradius,
    isosceles_dimensions,
    obtuse_threshold,
    orbit,
    orthic_center_transition,
    right_angle_vertex,
)
from .centers import (
    ORTHIC_CB_CENTER,
    SUPPORTED_CENTERS,
    act,
    center,
    excentral,
    medial,
    orthic,
    orthic_cb_center,
    trilinear_to_cartesian,
)
from .circumbilliard import (
    CircumbilliardResult,
    circumbilliard,
    derived_cb,
    derived_triangle,
    intouch_points,
    intouch_superposition_check,
    reflection_residual,
)
from .conic_invariants import (
    FocalSample,
    PoristicShape,
    RectHyperbola,
    billiard_intersections,
    count_interior_maxima,
    excentral_inconic_axes,
    feuerbach_hyperbola,
    focal_profile,
    focal_ratio_closed_form,
    jerabek_excentral,
    macbeath_inconic_ratio,
    poristic_cb_aspect,
    poristic_triangle,
    x3_inconic_ratio,
)
from .errors import (
    ClosureFailure,
    DegenerateConic,
    DegenerateTriangle,
    IllConditioned,
    InvalidShape,
    NoRealConic,
    NotAnEllipse,
    OrbitConicsError,
    PointAtInfinity,
    RightTriangle,
    SingularSystem,
    UndefinedForShape,
)
from .kernel import (
    Conic,
    ConicClass,
    EllipseParams,
    Point,
    Triangle,
    classify_conic,
    conic_eval,
    conic_to_ellipse_params,
    ellipse_to_conic,
    line_conic_tangency_residual,
    solve_circumconic,
    solve_inconic,
)
from .loci import (
    InvariantReport,
    LocusFitReport,
    LocusSweep,
    Verdict,
    fit_by_shape_class,
    fit_locus,
    invariant_report,
    sweep_locus,
)

__version__ = "0.1.0"
