from .apollonius import SignPattern, TangentCircle, solve_apollonius, verify_tangency
from .bisectors import (
    Ball,
    PlaneBisector,
    SheetBisector,
    bisector,
    min_containing_two,
    symmetric_normal,
    tangent_radius,
    triple_hyperplane,
)
from .cascade import (
    CascadeResult,
    CascadeState,
    intersect_bisectors,
    sample_result,
    verify_state,
)
from .conics import (
    ConicSpec,
    asymptotic_cone,
    cone_from_axis,
    directrix,
    ellipsoid_from_foci,
    hyperboloid_from_foci,
    metric_residual,
    paraboloid_from_points,
    paraboloid_residual,
    quadric_residual,
    sample_points,
)
from .geometry import Hyperplane, normalize, orthonormalize_against, project_out
from .settings import ConicKind, ResultKind, SheetTag, SliceClass, Tangency
from .slicer import SliceResult, classify_slice, slice_conic, slice_frame, vertex_path
from .utils import show_versions

# PEP0440 compatible formatted version, see:
# https://www.python.org/dev/peps/pep-0440/
#
# Final release markers:
#   X.Y.0   # For first release after an increment in Y
#   X.Y.Z   # For bugfix releases
#
# Admissible pre-release markers:
#   X.YaN   # Alpha release
#   X.YbN   # Beta release
#   X.YrcN  # Release Candidate
#
# Dev branch marker is: 'X.Y.dev' or 'X.Y.devN' where N is an integer.
# 'X.Y.dev0' is the canonical version of 'X.Y.dev'.
__version__ = "0.1.0"

__all__ = [
    "Ball",
    "CascadeResult",
    "CascadeState",
    "ConicKind",
    "ConicSpec",
    "Hyperplane",
    "PlaneBisector",
    "ResultKind",
    "SheetBisector",
    "SheetTag",
    "SignPattern",
    "SliceClass",
    "SliceResult",
    "Tangency",
    "TangentCircle",
    "asymptotic_cone",
    "bisector",
    "classify_slice",
    "cone_from_axis",
    "directrix",
    "ellipsoid_from_foci",
    "hyperboloid_from_foci",
    "intersect_bisectors",
    "metric_residual",
    "min_containing_two",
    "normalize",
    "orthonormalize_against",
    "paraboloid_from_points",
    "paraboloid_residual",
    "project_out",
    "quadric_residual",
    "sample_points",
    "sample_result",
    "show_versions",
    "slice_conic",
    "slice_frame",
    "solve_apollonius",
    "symmetric_normal",
    "tangent_radius",
    "triple_hyperplane",
    "verify_state",
    "verify_tangency",
    "vertex_path",
]
