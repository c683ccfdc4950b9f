"""Exact incidence geometry of the Moulton planes M_k.

Everything is computed over the rationals with zero tolerance: joins, meets
and incidence in M_k, chart atlases on the cylinder C_k, continuation and
holonomy along polyline arcs, and Desargues closure tests and searches.
"""

from .charts import (
    Atlas,
    Chart,
    Verdict,
    builtin_atlas_Ck,
    chart_apply,
    chart_union,
    extend_dense,
    glue,
    identity_chart,
    image_line,
    line_image_verdict,
    overlap_map,
    verify_chart_homomorphism,
)
from .continuation import (
    SLIT_CYLINDER,
    ChartChain,
    Continuation,
    HolonomyResult,
    Leg,
    PolylineArc,
    arc_in_region,
    build_chain,
    canonical_loop,
    continue_along,
    holonomy,
    leg_in_region,
    route_arc,
)
from .desargues import (
    ClassicalPlane,
    ClosureWitness,
    DesarguesConfig,
    PlaneModel,
    desargues_closes,
    find_nonclosing,
    random_configuration,
)
from .errors import (
    CoverageError,
    DegenerateError,
    DensityError,
    GeneralPositionError,
    GeometryError,
    InconsistentError,
    OnRemovedLineError,
    OutsideChartError,
    ParseError,
    SingularError,
)
from .kernels import BACKEND
from .model import (
    IDEAL_VERTICAL,
    LINE_AT_INFINITY,
    Affine,
    Graph,
    Ideal,
    IdealVertical,
    LineAtInfinity,
    MoultonAutomorphism,
    MoultonLine,
    MoultonPlane,
    MoultonPoint,
    Vertical,
    line_param,
    line_point,
    mincident,
    mjoin,
    mmeet,
    moulton_automorphism,
)
from .projective import (
    PLine,
    PPoint,
    Projectivity,
    apply,
    collinear,
    compose,
    fit_projectivity,
    invert,
    pincident,
    pjoin,
    pmeet,
    proj_equal,
    to_fraction,
)
from .regions import (
    EVERYTHING,
    IDEAL_SLOPE_IN_NEG,
    IDEAL_SLOPE_IN_POS,
    IS_AFFINE,
    IS_IDEAL,
    NOT_ON_RAY,
    X_NEG,
    X_POS,
    Y_NEG,
    Y_POS,
    And,
    Box,
    IdealSlopeIn,
    Not,
    Or,
    Region,
    region_contains,
    region_from_json,
)

__all__ = [
    "Atlas",
    "Chart",
    "Verdict",
    "builtin_atlas_Ck",
    "chart_apply",
    "chart_union",
    "extend_dense",
    "glue",
    "identity_chart",
    "image_line",
    "line_image_verdict",
    "overlap_map",
    "verify_chart_homomorphism",
    "SLIT_CYLINDER",
    "ChartChain",
    "Continuation",
    "HolonomyResult",
    "Leg",
    "PolylineArc",
    "arc_in_region",
    "build_chain",
    "canonical_loop",
    "continue_along",
    "holonomy",
    "leg_in_region",
    "route_arc",
    "ClassicalPlane",
    "ClosureWitness",
    "DesarguesConfig",
    "PlaneModel",
    "desargues_closes",
    "find_nonclosing",
    "random_configuration",
    "CoverageError",
    "DegenerateError",
    "DensityError",
    "GeneralPositionError",
    "GeometryError",
    "InconsistentError",
    "OnRemovedLineError",
    "OutsideChartError",
    "ParseError",
    "SingularError",
    "BACKEND",
    "IDEAL_VERTICAL",
    "LINE_AT_INFINITY",
    "Affine",
    "Graph",
    "Ideal",
    "IdealVertical",
    "LineAtInfinity",
    "MoultonAutomorphism",
    "MoultonLine",
    "MoultonPlane",
    "MoultonPoint",
    "Vertical",
    "line_param",
    "line_point",
    "mincident",
    "mjoin",
    "mmeet",
    "moulton_automorphism",
    "PLine",
    "PPoint",
    "Projectivity",
    "apply",
    "collinear",
    "compose",
    "fit_projectivity",
    "invert",
    "pincident",
    "pjoin",
    "pmeet",
    "proj_equal",
    "to_fraction",
    "EVERYTHING",
    "IDEAL_SLOPE_IN_NEG",
    "IDEAL_SLOPE_IN_POS",
    "IS_AFFINE",
    "IS_IDEAL",
    "NOT_ON_RAY",
    "X_NEG",
    "X_POS",
    "Y_NEG",
    "Y_POS",
    "And",
    "Box",
    "IdealSlopeIn",
    "Not",
    "Or",
    "Region",
    "region_contains",
    "region_from_json",
]

__version__ = "0.1.0"
