class GeometryError(ValueError):
    """
    Base class of the exceptions raised by the geometric operations.

    Each subclass carries a stable `code` string, reported by the command-line
    interface.
    """

    code = "geometry_error"


class InfeasibleError(GeometryError):
    """
    Base class of the exceptions raised when the requested set is empty.
    """

    code = "infeasible"


class InvalidInputError(GeometryError):
    """
    Exception raised when a serialized input cannot be interpreted.
    """

    code = "invalid_input"


class DimensionError(GeometryError):
    """
    Exception raised when operands have mismatched or invalid dimensions.
    """

    code = "dimension_mismatch"


class ZeroVectorError(GeometryError):
    """
    Exception raised when a vector to be normalized is numerically zero.
    """

    code = "zero_vector"


class DependentVectorError(GeometryError):
    """
    Exception raised when a vector lies in the span of a basis.
    """

    code = "dependent_vector"


class DegenerateRaysError(GeometryError):
    """
    Exception raised when a hyperboloid degenerates into two rays.
    """

    code = "degenerate_rays"


class InvalidConstantError(GeometryError):
    """
    Exception raised when a metric constant violates the triangle inequality.
    """

    code = "invalid_constant"


class CoincidentFociError(GeometryError):
    """
    Exception raised when two focal points coincide.
    """

    code = "coincident_foci"


class DegenerateSegmentError(GeometryError):
    """
    Exception raised when an ellipsoid degenerates into a line segment.
    """

    code = "degenerate_segment"


class InvalidEccentricityError(GeometryError):
    """
    Exception raised when an eccentricity is out of range for a kind.
    """

    code = "invalid_eccentricity"


class KindMismatchError(GeometryError):
    """
    Exception raised when an operation does not apply to a conic kind.
    """

    code = "kind_mismatch"


class DegenerateOutputError(GeometryError):
    """
    Exception raised when a slice is a point or a degenerate cone.

    The tagged result is available as the `result` attribute.
    """

    code = "degenerate_output"

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class CoincidentCentersError(GeometryError):
    """
    Exception raised when two balls of different radii share their center.
    """

    code = "coincident_centers"


class AffineDependenceError(GeometryError):
    """
    Exception raised when ball centers are affinely dependent.
    """

    code = "affine_dependence"


class EqualRadiiError(GeometryError):
    """
    Exception raised when a formula requires distinct radii.
    """

    code = "equal_radii"


class AllRadiiEqualError(EqualRadiiError):
    """
    Exception raised when all the radii of a ball triple are equal.
    """

    code = "all_radii_equal"


class TooManyBallsError(GeometryError):
    """
    Exception raised when more than n + 1 balls are given in dimension n.
    """

    code = "too_many_balls"


class EmptyIntersectionError(InfeasibleError):
    """
    Exception raised when an intersection is empty.
    """

    code = "empty_intersection"


class ContainedBallError(InfeasibleError):
    """
    Exception raised when one ball contains another one.
    """

    code = "contained_ball"


class InfeasibleConfigurationError(InfeasibleError):
    """
    Exception raised when no tangent circle can be constructed.
    """

    code = "infeasible_configuration"
