import sys
from enum import Enum

import numpy as np


class ConicKind(str, Enum):
    """
    Kinds of n-dimensional conic sections.
    """

    HYPERBOLOID = "HyperboloidTwoSheets"
    ELLIPSOID = "Ellipsoid"
    PARABOLOID = "Paraboloid"
    CONE = "Cone"


class SheetTag(str, Enum):
    """
    Sheets of a conic section.
    """

    SHEET1 = "Sheet1"
    SHEET2 = "Sheet2"
    WHOLE = "Whole"


class SliceClass(str, Enum):
    """
    Classes of the intersection of a conic section with a hyperplane.
    """

    HYPERBOLIC = "HyperbolicSlice"
    ELLIPTIC = "EllipticSlice"
    PARABOLIC = "ParabolicSlice"
    BALL = "BallSlice"
    POINT = "PointSlice"
    DEGENERATE_CONE = "DegenerateConeSlice"
    EMPTY = "EmptySlice"


class ResultKind(str, Enum):
    """
    Kinds of the intersection of several bisectors.
    """

    CONIC = "Conic"
    FLAT = "Flat"
    POINT_PAIR = "PointPair"
    EMPTY = "Empty"


class Tangency(str, Enum):
    """
    Tangency of a solution circle with an input circle.
    """

    INTERNAL = "internal"
    EXTERNAL = "external"


class Tolerances(str, Enum):
    """
    Relative tolerances.
    """

    ZERO = "zero"
    BOUNDARY = "boundary"
    RADIUS = "radius"
    BAND = "band"
    ALIGNED = "aligned"
    EMPTY = "empty"
    TANGENCY = "tangency"


class Constants(str, Enum):
    """
    Constants.
    """

    SAMPLER_MARGIN = "sampler_margin"
    CONE_SPAN = "cone_span"
    PARABOLA_SPAN = "parabola_span"
    APOLLONIUS_SHIFT = "apollonius_shift"
    TINY_DIRECTION = "tiny_direction"


class OmitReason(str, Enum):
    """
    Reasons why a sign pattern yields no tangent circle.
    """

    CONTAINED = "contained_ball"
    EMPTY = "empty_intersection"
    NONPOSITIVE_RADIUS = "nonpositive_radius"
    TANGENCY = "tangency_failed"
    DUPLICATE = "duplicate"


# Default tolerances.
DEFAULT_TOLERANCES = {
    Tolerances.ZERO.value: 1e-12,
    Tolerances.BOUNDARY.value: 1e-10,
    Tolerances.RADIUS.value: 1e-10,
    Tolerances.BAND.value: 1e-9,
    Tolerances.ALIGNED.value: 1e-12,
    Tolerances.EMPTY.value: 1e-12,
    Tolerances.TANGENCY.value: 1e-7,
}

# Default constants.
DEFAULT_CONSTANTS = {
    Constants.SAMPLER_MARGIN.value: 1e-3,
    Constants.CONE_SPAN.value: 2.0,
    Constants.PARABOLA_SPAN.value: 3.0,
    Constants.APOLLONIUS_SHIFT.value: 1.0,
    Constants.TINY_DIRECTION.value: 1e-12,
}

# Printing options.
PRINT_OPTIONS = {
    "threshold": 8,
    "edgeitems": 3,
    "linewidth": sys.maxsize,
    "formatter": {
        "float_kind": lambda x: np.format_float_scientific(
            x,
            precision=6,
            unique=False,
            pad_left=2,
        )
    },
}