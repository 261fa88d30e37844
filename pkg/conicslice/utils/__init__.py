from .exceptions import (
    GeometryError,
    InfeasibleError,
    InvalidInputError,
    DimensionError,
    ZeroVectorError,
    DependentVectorError,
    DegenerateRaysError,
    InvalidConstantError,
    CoincidentFociError,
    DegenerateSegmentError,
    InvalidEccentricityError,
    KindMismatchError,
    DegenerateOutputError,
    CoincidentCentersError,
    AffineDependenceError,
    EqualRadiiError,
    AllRadiiEqualError,
    TooManyBallsError,
    EmptyIntersectionError,
    ContainedBallError,
    InfeasibleConfigurationError,
)
from .math import (
    get_scale,
    get_arrays_tol,
    exact_1d_array,
    exact_2d_array,
    check_dimensions,
    resolve_tolerances,
    scale_tolerances,
)
from .versions import get_versions, show_versions

__all__ = [
    "GeometryError",
    "InfeasibleError",
    "InvalidInputError",
    "DimensionError",
    "ZeroVectorError",
    "DependentVectorError",
    "DegenerateRaysError",
    "InvalidConstantError",
    "CoincidentFociError",
    "DegenerateSegmentError",
    "InvalidEccentricityError",
    "KindMismatchError",
    "DegenerateOutputError",
    "CoincidentCentersError",
    "AffineDependenceError",
    "EqualRadiiError",
    "AllRadiiEqualError",
    "TooManyBallsError",
    "EmptyIntersectionError",
    "ContainedBallError",
    "InfeasibleConfigurationError",
    "get_scale",
    "get_arrays_tol",
    "exact_1d_array",
    "exact_2d_array",
    "check_dimensions",
    "resolve_tolerances",
    "scale_tolerances",
    "get_versions",
    "show_versions",
]
