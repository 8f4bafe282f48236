"""Exact counting of ordinary lines and ordinary circles in planar point sets."""

from .configs import (
    Incidence,
    SymmetricConfig,
    SymPoint,
    equidistant_points,
    make_boroczky,
    make_even_construction,
    make_odd_construction,
    member,
    modify_config,
    sym_cocircular,
    sym_collinear,
)
from .counting import (
    Algorithm,
    CountReport,
    IncidenceCensus,
    circle_census,
    count_symmetric,
    line_census,
    non_q_ordinary_lines,
    ordinary_circles_brute,
    ordinary_circles_by_inversion,
    ordinary_lines,
    theorem_check_ol,
)
from .embedding import EmbeddedConfig, embed, make_linecircle_construction
from .inversion import InversionMap, invert_curve, invert_generalized_circle, invert_point, invert_point_set
from .kernel import (
    LINE_AT_INFINITY,
    AffinePoint,
    GeneralizedCircle,
    Line,
    PointSet,
    ProjPoint,
    ProjTransform,
    apply_transform,
    circle_through,
    cocircular,
    line_through,
    orient,
    point,
)

__version__ = "0.1.0"
