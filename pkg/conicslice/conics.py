import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import (
    Hyperplane,
    as_vector,
    complement_basis,
    normalize,
)
from .settings import (
    DEFAULT_CONSTANTS,
    ConicKind,
    Constants,
    SheetTag,
    Tolerances,
)
from .utils import (
    CoincidentFociError,
    DegenerateOutputError,
    DegenerateRaysError,
    DegenerateSegmentError,
    InvalidConstantError,
    InvalidEccentricityError,
    KindMismatchError,
    ZeroVectorError,
    check_dimensions,
    exact_1d_array,
    get_arrays_tol,
    get_scale,
    resolve_tolerances,
)

logger = logging.getLogger(__name__)

_Q_FORM_KINDS = (ConicKind.HYPERBOLOID, ConicKind.ELLIPSOID, ConicKind.CONE)
_TWO_SHEET_KINDS = (ConicKind.HYPERBOLOID, ConicKind.CONE)


def _optional_float(value, name):
    if value is None:
        return None
    value = float(value)
    if not np.isfinite(value):
        raise InvalidConstantError(f"The parameter {name} must be finite.")
    return value


def _optional_vector(value, name):
    if value is None:
        return None
    return as_vector(value, name)


@dataclass(frozen=True, eq=False)
class ConicSpec:
    """
    Axis-symmetric n-dimensional conic section.

    A conic section is stored in ambient coordinates, whatever the dimension
    of the affine hull it lives in. Missing derived parameters are computed at
    construction, and the arrays are made read-only.

    Attributes
    ----------
    kind : ConicKind
        Kind of the conic section.
    center : `numpy.ndarray`, shape (n,)
        Center, which is the midpoint of the focal points. For a paraboloid,
        it is the vertex, and for a cone, it is the apex.
    axis : `numpy.ndarray`, shape (n,)
        Unit axis vector, pointing from the second focal point toward the
        first one.
    c_param : float
        Distance from the center to the focal points. It is normalized to one
        for a cone.
    a : float or None
        Half of the metric constant. It is ``1 / eccentricity`` for a cone and
        absent for a paraboloid.
    b : float or None
        Square root of ``abs(c_param ** 2 - a ** 2)``; absent for a paraboloid.
    eccentricity : float or None
        Ratio ``c_param / a``; absent for a paraboloid.
    focus1 : `numpy.ndarray` or None, shape (n,)
        First focal point ``center + c_param * axis``.
    focus2 : `numpy.ndarray` or None, shape (n,)
        Second focal point ``center - c_param * axis``; absent for a cone.
    """

    kind: ConicKind
    center: np.ndarray
    axis: np.ndarray
    c_param: float
    a: Optional[float] = None
    b: Optional[float] = None
    eccentricity: Optional[float] = None
    focus1: Optional[np.ndarray] = None
    focus2: Optional[np.ndarray] = None

    def __post_init__(self):
        kind = ConicKind(self.kind)
        center = as_vector(self.center, "center")
        axis = exact_1d_array(self.axis, "The axis must be a finite vector.")
        check_dimensions(center, axis)
        norm = np.linalg.norm(axis)
        if norm <= get_arrays_tol(axis):
            raise ZeroVectorError("The axis of a conic must be nonzero.")
        if abs(norm - 1.0) > 1e-12:
            axis = axis / norm
        axis.flags.writeable = False

        c_param = _optional_float(self.c_param, "c")
        if c_param is None or c_param < 0.0:
            raise InvalidConstantError("The parameter c must be nonnegative.")
        a = _optional_float(self.a, "a")
        b = _optional_float(self.b, "b")
        eps = _optional_float(self.eccentricity, "eccentricity")

        if kind is ConicKind.HYPERBOLOID:
            if a is None or not 0.0 < a < c_param:
                raise InvalidConstantError(
                    "A hyperboloid requires 0 < a < c."
                )
            eps = c_param / a if eps is None else eps
            b = np.sqrt(c_param ** 2.0 - a ** 2.0) if b is None else b
            if eps <= 1.0:
                raise InvalidEccentricityError(
                    "The eccentricity of a hyperboloid must exceed one."
                )
        elif kind is ConicKind.ELLIPSOID:
            if a is None or not 0.0 <= c_param < a:
                raise InvalidConstantError("An ellipsoid requires 0 <= c < a.")
            eps = c_param / a if eps is None else eps
            b = np.sqrt(a ** 2.0 - c_param ** 2.0) if b is None else b
            if not 0.0 <= eps < 1.0:
                raise InvalidEccentricityError(
                    "The eccentricity of an ellipsoid must be less than one."
                )
        elif kind is ConicKind.CONE:
            if eps is None and a is not None and a > 0.0:
                eps = c_param / a
            if eps is None or eps <= 1.0:
                raise InvalidEccentricityError(
                    "The eccentricity of a cone must exceed one."
                )
            a = c_param / eps if a is None else a
            b = np.sqrt(c_param ** 2.0 - a ** 2.0) if b is None else b
        else:
            if c_param <= 0.0:
                raise InvalidConstantError(
                    "The parameter c of a paraboloid must be positive."
                )
            a = b = eps = None

        focus1 = _optional_vector(self.focus1, "focus1")
        if focus1 is None:
            focus1 = as_vector(center + c_param * axis, "focus1")
        focus2 = _optional_vector(self.focus2, "focus2")
        if kind is ConicKind.CONE:
            focus2 = None
        elif focus2 is None:
            focus2 = as_vector(center - c_param * axis, "focus2")
        check_dimensions(center, focus1, focus2)

        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "c_param", c_param)
        object.__setattr__(self, "a", a if a is None else float(a))
        object.__setattr__(self, "b", b if b is None else float(b))
        object.__setattr__(
            self,
            "eccentricity",
            eps if eps is None else float(eps),
        )
        object.__setattr__(self, "focus1", focus1)
        object.__setattr__(self, "focus2", focus2)

    @classmethod
    def from_parameters(cls, kind, center, axis, c_param, a=None):
        """
        Build a conic section from its center, axis and parameters.

        Parameters
        ----------
        kind : ConicKind
            Kind of the conic section.
        center : array_like, shape (n,)
            Center of the conic section.
        axis : array_like, shape (n,)
            Axis vector. It is normalized.
        c_param : float
            Distance from the center to the focal points.
        a : float, optional
            Half of the metric constant (ignored for a paraboloid).

        Returns
        -------
        ConicSpec
            Conic section with its foci materialized.
        """
        kind = ConicKind(kind)
        if kind is ConicKind.PARABOLOID:
            a = None
        return cls(kind, center, normalize(axis), c_param, a=a)

    @property
    def dim(self):
        """
        Ambient dimension.

        Returns
        -------
        int
        """
        return self.center.size

    @property
    def k_param(self):
        """
        Signed right-hand side ``c ** 2 - a ** 2`` of the quadratic form.

        Returns
        -------
        float or None
            Zero for a cone and ``None`` for a paraboloid.
        """
        if self.kind is ConicKind.CONE:
            return 0.0
        if self.kind is ConicKind.PARABOLOID:
            return None
        return (self.c_param - self.a) * (self.c_param + self.a)

    @property
    def directrix_offset(self):
        """
        Distance from the center to the directrices.

        Returns
        -------
        float or None
            ``a ** 2 / c`` for a hyperboloid or an ellipsoid (infinite for a
            sphere), ``c`` for a paraboloid and ``None`` for a cone.
        """
        if self.kind is ConicKind.PARABOLOID:
            return self.c_param
        if self.kind is ConicKind.CONE:
            return None
        if self.c_param == 0.0:
            return np.inf
        return self.a ** 2.0 / self.c_param

    @property
    def directrix_points(self):
        """
        Intersections of the directrices with the axis.

        Returns
        -------
        tuple of `numpy.ndarray`
            Points ``center + d * axis`` and ``center - d * axis``.

        Raises
        ------
        KindMismatchError
            If the conic section is not a hyperboloid or an ellipsoid.
        DegenerateOutputError
            If the conic section is a sphere.
        """
        if self.kind not in (ConicKind.HYPERBOLOID, ConicKind.ELLIPSOID):
            raise KindMismatchError(
                f"The directrix points of a {self.kind.value} are undefined."
            )
        d = self.directrix_offset
        if not np.isfinite(d):
            raise DegenerateOutputError("The directrices of a sphere are at infinity.")
        return self.center + d * self.axis, self.center - d * self.axis

    @property
    def vertices(self):
        """
        Vertices of the conic section.

        Returns
        -------
        tuple of `numpy.ndarray`
            Points ``center + a * axis`` and ``center - a * axis`` for a
            hyperboloid or an ellipsoid, and the center alone otherwise.
        """
        if self.kind in (ConicKind.HYPERBOLOID, ConicKind.ELLIPSOID):
            return (
                self.center + self.a * self.axis,
                self.center - self.a * self.axis,
            )
        return (np.copy(self.center),)

    @property
    def scale(self):
        """
        Length scale ``max(1, norm(center, inf), c, a)`` used by tolerances.

        Returns
        -------
        float
        """
        return get_scale(self.center, self.c_param, self.a)


def hyperboloid_from_foci(p1, p2, two_a, tol=None):
    """
    Build a hyperboloid of two sheets from its focal points.

    The hyperboloid is the set of points whose distances to `p1` and `p2`
    differ by `two_a` in absolute value.

    Parameters
    ----------
    p1, p2 : array_like, shape (n,)
        Focal points. The first sheet is the one closest to `p1`.
    two_a : float
        Metric constant.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    ConicSpec
        Hyperboloid of two sheets.

    Raises
    ------
    CoincidentFociError
        If `p1` and `p2` coincide.
    DegenerateRaysError
        If `two_a` equals the distance between the focal points.
    InvalidConstantError
        If `two_a` is not positive or exceeds the distance between the focal
        points.

    Examples
    --------
    >>> from conicslice.conics import hyperboloid_from_foci
    >>> spec = hyperboloid_from_foci([1.0, 0.0], [-1.0, 0.0], 1.0)
    >>> spec.eccentricity
    2.0
    """
    tol = resolve_tolerances(tol)
    p1 = as_vector(p1, "p1")
    p2 = as_vector(p2, "p2")
    check_dimensions(p1, p2)
    two_a = float(two_a)
    if not np.isfinite(two_a) or two_a <= 0.0:
        raise InvalidConstantError("The metric constant must be positive.")
    dist = np.linalg.norm(p1 - p2)
    if dist <= get_arrays_tol(p1, p2, rtol=tol[Tolerances.ZERO]):
        raise CoincidentFociError("The focal points of a hyperboloid coincide.")
    if abs(two_a - dist) <= tol[Tolerances.BOUNDARY] * max(1.0, two_a, dist):
        raise DegenerateRaysError(
            "The sheets of the hyperboloid are rays, since 2a equals 2c."
        )
    if two_a > dist:
        raise InvalidConstantError(
            "The metric constant of a hyperboloid must not exceed 2c."
        )
    return ConicSpec(
        ConicKind.HYPERBOLOID,
        0.5 * (p1 + p2),
        (p1 - p2) / dist,
        0.5 * dist,
        a=0.5 * two_a,
        focus1=p1,
        focus2=p2,
    )


def ellipsoid_from_foci(p1, p2, two_a, tol=None):
    """
    Build an ellipsoid from its focal points.

    The ellipsoid is the set of points whose distances to `p1` and `p2` sum
    to `two_a`. When the focal points coincide, the ellipsoid is a sphere
    whose axis is the first coordinate vector.

    Parameters
    ----------
    p1, p2 : array_like, shape (n,)
        Focal points.
    two_a : float
        Metric constant.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    ConicSpec
        Ellipsoid.

    Raises
    ------
    DegenerateSegmentError
        If `two_a` equals the distance between the focal points.
    InvalidConstantError
        If `two_a` is not positive or is less than the distance between the
        focal points.
    """
    tol = resolve_tolerances(tol)
    p1 = as_vector(p1, "p1")
    p2 = as_vector(p2, "p2")
    check_dimensions(p1, p2)
    two_a = float(two_a)
    if not np.isfinite(two_a) or two_a <= 0.0:
        raise InvalidConstantError("The metric constant must be positive.")
    dist = np.linalg.norm(p1 - p2)
    if abs(two_a - dist) <= tol[Tolerances.BOUNDARY] * max(1.0, two_a, dist):
        raise DegenerateSegmentError(
            "The ellipsoid is the segment between its focal points."
        )
    if two_a < dist:
        raise InvalidConstantError(
            "The metric constant of an ellipsoid must exceed 2c."
        )
    center = 0.5 * (p1 + p2)
    if dist <= get_arrays_tol(p1, p2, rtol=tol[Tolerances.ZERO]):
        axis = np.zeros(p1.size)
        axis[0] = 1.0
        return ConicSpec(
            ConicKind.ELLIPSOID,
            center,
            axis,
            0.0,
            a=0.5 * two_a,
            focus1=center,
            focus2=center,
        )
    return ConicSpec(
        ConicKind.ELLIPSOID,
        center,
        (p1 - p2) / dist,
        0.5 * dist,
        a=0.5 * two_a,
        focus1=p1,
        focus2=p2,
    )


def paraboloid_from_points(p1, p2, tol=None):
    """
    Build a paraboloid from its focal point and the foot of its directrix.

    The paraboloid is the set of points equidistant from `p1` and from the
    hyperplane through `p2` orthogonal to ``p1 - p2``.

    Parameters
    ----------
    p1 : array_like, shape (n,)
        Focal point.
    p2 : array_like, shape (n,)
        Point of the directrix on the axis.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    ConicSpec
        Paraboloid, whose center is its vertex.

    Raises
    ------
    CoincidentFociError
        If `p1` and `p2` coincide.
    """
    tol = resolve_tolerances(tol)
    p1 = as_vector(p1, "p1")
    p2 = as_vector(p2, "p2")
    check_dimensions(p1, p2)
    dist = np.linalg.norm(p1 - p2)
    if dist <= get_arrays_tol(p1, p2, rtol=tol[Tolerances.ZERO]):
        raise CoincidentFociError("The points of a paraboloid coincide.")
    return ConicSpec(
        ConicKind.PARABOLOID,
        0.5 * (p1 + p2),
        (p1 - p2) / dist,
        0.5 * dist,
        focus1=p1,
        focus2=p2,
    )


def cone_from_axis(center, v, eps, tol=None):
    """
    Build a cone from its apex, axis and eccentricity.

    The cone is the set of points `x` such that
    ``norm(x - center) = eps * abs(v @ (x - center))``. Its parameters are
    normalized to ``a = 1 / eps`` and ``c = 1``.

    Parameters
    ----------
    center : array_like, shape (n,)
        Apex.
    v : array_like, shape (n,)
        Axis vector. It is normalized.
    eps : float
        Eccentricity, which is the secant of the half-angle.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    ConicSpec
        Cone.

    Raises
    ------
    InvalidEccentricityError
        If `eps` does not exceed one.
    """
    tol = resolve_tolerances(tol)
    eps = float(eps)
    if not np.isfinite(eps) or eps <= 1.0 + tol[Tolerances.BOUNDARY] * max(1.0, eps):
        raise InvalidEccentricityError(
            "The eccentricity of a cone must exceed one."
        )
    return ConicSpec(
        ConicKind.CONE,
        center,
        normalize(v, tol),
        1.0,
        a=1.0 / eps,
        eccentricity=eps,
    )


def quadratic_form(spec, y):
    """
    Evaluate the quadratic form ``y.T @ (eps ** 2 * v @ v.T - I) @ y``.

    The form is evaluated as ``(eps * v @ y) ** 2 - y @ y``, with ``eps = 1``
    for a paraboloid.

    Parameters
    ----------
    spec : ConicSpec
        Conic section.
    y : array_like, shape (n,) or (m, n)
        Displacements from the center.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)
    """
    y = np.asarray(y, dtype=float)
    eps = 1.0 if spec.kind is ConicKind.PARABOLOID else spec.eccentricity
    axial = eps * (y @ spec.axis)
    return axial ** 2.0 - np.sum(y ** 2.0, axis=-1)


def quadric_residual(spec, x):
    """
    Residual of the quadratic-form equation of a conic section.

    Parameters
    ----------
    spec : ConicSpec
        Hyperboloid, ellipsoid or cone.
    x : array_like, shape (n,) or (m, n)
        Points.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)
        ``(eps * v @ (x - c)) ** 2 - norm(x - c) ** 2 - (c ** 2 - a ** 2)``,
        which vanishes on the surface.

    Raises
    ------
    KindMismatchError
        If `spec` is a paraboloid.
    """
    if spec.kind not in _Q_FORM_KINDS:
        raise KindMismatchError("Use paraboloid_residual for a paraboloid.")
    y = np.asarray(x, dtype=float) - spec.center
    return quadratic_form(spec, y) - spec.k_param


def paraboloid_residual(spec, x):
    """
    Residual of the quadratic equation of a paraboloid.

    Parameters
    ----------
    spec : ConicSpec
        Paraboloid.
    x : array_like, shape (n,) or (m, n)
        Points.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)
        ``(x - c).T @ (v @ v.T - I) @ (x - c) + 4 * c * v @ (x - c)``.

    Raises
    ------
    KindMismatchError
        If `spec` is not a paraboloid.
    """
    if spec.kind is not ConicKind.PARABOLOID:
        raise KindMismatchError("Use quadric_residual for this conic section.")
    y = np.asarray(x, dtype=float) - spec.center
    return quadratic_form(spec, y) + 4.0 * spec.c_param * (y @ spec.axis)


def surface_residual(spec, x):
    """
    Residual of the quadratic equation of any conic section.
    """
    if spec.kind is ConicKind.PARABOLOID:
        return paraboloid_residual(spec, x)
    return quadric_residual(spec, x)


def _sheet_tags(axial):
    if np.ndim(axial) == 0:
        return SheetTag.SHEET1 if axial >= 0.0 else SheetTag.SHEET2
    return np.array(
        [SheetTag.SHEET1 if s >= 0.0 else SheetTag.SHEET2 for s in axial],
        dtype=object,
    )


def metric_residual(spec, x):
    """
    Residual of the metric definition of a conic section.

    Parameters
    ----------
    spec : ConicSpec
        Hyperboloid, ellipsoid or paraboloid.
    x : array_like, shape (n,) or (m, n)
        Points.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)
        Residual of the metric definition.
    SheetTag or `numpy.ndarray`, shape (m,)
        Sheet of each point. The sheets of a hyperboloid are separated by the
        hyperplane through the center orthogonal to the axis.

    Raises
    ------
    KindMismatchError
        If `spec` is a cone.
    """
    if spec.kind is ConicKind.CONE:
        raise KindMismatchError("The metric definition of a cone is undefined.")
    x = np.asarray(x, dtype=float)
    dist1 = np.linalg.norm(x - spec.focus1, axis=-1)
    dist2 = np.linalg.norm(x - spec.focus2, axis=-1)
    if spec.kind is ConicKind.HYPERBOLOID:
        axial = (x - spec.center) @ spec.axis
        two_a = np.where(axial >= 0.0, 2.0 * spec.a, -2.0 * spec.a)
        residual = dist2 - dist1 - two_a
        return residual[()], _sheet_tags(axial)
    if spec.kind is ConicKind.ELLIPSOID:
        residual = dist2 + dist1 - 2.0 * spec.a
    else:
        residual = dist1 - (x - spec.focus2) @ spec.axis
    tags = SheetTag.WHOLE
    if np.ndim(residual) > 0:
        tags = np.full(np.shape(residual), SheetTag.WHOLE, dtype=object)
    return residual, tags


def directrix_residual(spec, x, sheet=SheetTag.WHOLE):
    """
    Residual of the focus-directrix form of a conic section.

    For a hyperboloid, the first sheet satisfies
    ``norm(p1 - x) = eps * (v @ x - v @ d1)`` and the second one
    ``norm(p2 - x) = eps * (v @ d2 - v @ x)``. An ellipsoid satisfies both
    ``norm(p1 - x) = eps * (v @ d1 - v @ x)`` and
    ``norm(p2 - x) = eps * (v @ x - v @ d2)``; `sheet` selects the form
    (``Sheet1`` for the first, ``Sheet2`` for the second, ``Whole`` for the
    larger residual in absolute value). A paraboloid satisfies
    ``norm(p1 - x) = v @ (x - p2)``.

    Parameters
    ----------
    spec : ConicSpec
        Hyperboloid, ellipsoid or paraboloid.
    x : array_like, shape (n,) or (m, n)
        Points.
    sheet : SheetTag, optional
        Sheet or form to evaluate.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)

    Raises
    ------
    KindMismatchError
        If `spec` is a cone, or if a hyperboloid is evaluated on ``Whole``.
    """
    sheet = SheetTag(sheet)
    x = np.asarray(x, dtype=float)
    if spec.kind is ConicKind.CONE:
        raise KindMismatchError("A cone has no directrix.")
    dist1 = np.linalg.norm(x - spec.focus1, axis=-1)
    if spec.kind is ConicKind.PARABOLOID:
        return dist1 - (x - spec.focus2) @ spec.axis
    dist2 = np.linalg.norm(x - spec.focus2, axis=-1)
    d1, d2 = spec.directrix_points
    eps = spec.eccentricity
    if spec.kind is ConicKind.HYPERBOLOID:
        if sheet is SheetTag.SHEET1:
            return dist1 - eps * ((x - d1) @ spec.axis)
        if sheet is SheetTag.SHEET2:
            return dist2 - eps * ((d2 - x) @ spec.axis)
        raise KindMismatchError("Select one sheet of the hyperboloid.")
    first = dist1 - eps * ((d1 - x) @ spec.axis)
    second = dist2 - eps * ((x - d2) @ spec.axis)
    if sheet is SheetTag.SHEET1:
        return first
    if sheet is SheetTag.SHEET2:
        return second
    return np.where(np.abs(first) >= np.abs(second), first, second)[()]


def cone_residual(spec, x):
    """
    Residual of the sheet decomposition of a cone.

    Parameters
    ----------
    spec : ConicSpec
        Cone.
    x : array_like, shape (n,) or (m, n)
        Points.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)
        ``norm(x - c) - eps * abs(v @ (x - c))``.
    SheetTag or `numpy.ndarray`, shape (m,)
        Sheet of each point, from the sign of ``v @ (x - c)``.
    """
    if spec.kind is not ConicKind.CONE:
        raise KindMismatchError("The conic section is not a cone.")
    y = np.asarray(x, dtype=float) - spec.center
    axial = y @ spec.axis
    residual = np.linalg.norm(y, axis=-1) - spec.eccentricity * np.abs(axial)
    return residual, _sheet_tags(axial)


def directrix(spec, which=SheetTag.SHEET1):
    """
    Directrix of a sheet of a conic section.

    Parameters
    ----------
    spec : ConicSpec
        Hyperboloid, ellipsoid or paraboloid.
    which : SheetTag, optional
        Sheet whose directrix is returned. It is ignored for a paraboloid.

    Returns
    -------
    Hyperplane
        Hyperplane orthogonal to the axis.

    Raises
    ------
    KindMismatchError
        If `spec` is a cone.
    DegenerateOutputError
        If `spec` is a sphere.
    """
    which = SheetTag(which)
    if spec.kind is ConicKind.CONE:
        raise KindMismatchError("A cone has no directrix.")
    if spec.kind is ConicKind.PARABOLOID:
        point = spec.focus2
    elif which is SheetTag.SHEET2:
        point = spec.directrix_points[1]
    else:
        point = spec.directrix_points[0]
    return Hyperplane(np.copy(spec.axis), float(np.dot(spec.axis, point)))


def parametric_points(spec, u, alpha, sheet=SheetTag.SHEET1):
    """
    Evaluate the planar curves that parametrize a conic section.

    The curves are, for a unit vector `u` orthogonal to the axis `v`,

    - hyperboloid: ``c + s * a * sec(alpha) * v + b * tan(alpha) * u``,
    - ellipsoid: ``c + a * cos(alpha) * v + b * sin(alpha) * u``,
    - cone: ``c + s * a * abs(alpha) * v + b * alpha * u``,
    - paraboloid: ``c + c_param * alpha ** 2 * v + 2 * c_param * alpha * u``,

    where ``s`` is one on the first sheet and minus one on the second one.

    Parameters
    ----------
    spec : ConicSpec
        Conic section.
    u : array_like, shape (n,) or (m, n)
        Unit vectors orthogonal to the axis.
    alpha : float or array_like, shape (m,)
        Curve parameters.
    sheet : SheetTag or array_like, optional
        Sheet of each point, for a hyperboloid or a cone.

    Returns
    -------
    `numpy.ndarray`, shape (n,) or (m, n)
    """
    alpha = np.asarray(alpha, dtype=float)
    u = np.asarray(u, dtype=float)
    if np.ndim(sheet) == 0:
        sign = -1.0 if SheetTag(sheet) is SheetTag.SHEET2 else 1.0
    else:
        sign = np.array([-1.0 if SheetTag(s) is SheetTag.SHEET2 else 1.0 for s in sheet])
    if spec.kind is ConicKind.HYPERBOLOID:
        along = sign * spec.a / np.cos(alpha)
        across = spec.b * np.tan(alpha)
    elif spec.kind is ConicKind.ELLIPSOID:
        along = spec.a * np.cos(alpha)
        across = spec.b * np.sin(alpha)
    elif spec.kind is ConicKind.CONE:
        along = sign * spec.a * np.abs(alpha)
        across = spec.b * alpha
    else:
        along = spec.c_param * alpha ** 2.0
        across = 2.0 * spec.c_param * alpha
    along = np.asarray(along)[..., np.newaxis]
    across = np.asarray(across)[..., np.newaxis]
    return spec.center + along * spec.axis + across * u


def random_directions(spec, count, rng, hull=None):
    """
    Draw random unit vectors orthogonal to the axis and to a hull.

    Parameters
    ----------
    spec : ConicSpec
        Conic section.
    count : int
        Number of directions.
    rng : `numpy.random.Generator`
        Random generator.
    hull : array_like, shape (k, n), optional
        Normals of the affine hull of the conic section, stored row-wise.

    Returns
    -------
    `numpy.ndarray`, shape (count, n) or None
        Directions, or ``None`` if the axis and the hull span the space.
    """
    constraints = [spec.axis]
    if hull is not None and np.size(hull) > 0:
        constraints.extend(np.reshape(hull, (-1, spec.dim)))
    basis = complement_basis(np.array(constraints), spec.dim)
    if basis.shape[0] == 0:
        return None
    directions = rng.standard_normal((count, basis.shape[0])) @ basis
    norms = np.linalg.norm(directions, axis=1)
    tiny = norms <= DEFAULT_CONSTANTS[Constants.TINY_DIRECTION]
    directions[tiny] = basis[0]
    norms[tiny] = 1.0
    return directions / norms[:, np.newaxis]


def sample_points(spec, sheet, count, seed=None, hull=None):
    """
    Sample points on a conic section.

    Parameters
    ----------
    spec : ConicSpec
        Conic section.
    sheet : SheetTag
        Sheet to sample. A hyperboloid or a cone accepts ``Sheet1``,
        ``Sheet2`` or ``Whole`` (both sheets); an ellipsoid or a paraboloid
        accepts ``Whole`` only.
    count : int
        Number of points.
    seed : int or `numpy.random.Generator`, optional
        Seed of the random generator.
    hull : array_like, shape (k, n), optional
        Normals of the affine hull the conic section lives in, such as the
        normal of a slicing hyperplane. The points stay in that affine hull.

    Returns
    -------
    `numpy.ndarray`, shape (count, n)
        Points on the conic section.

    Raises
    ------
    KindMismatchError
        If `sheet` does not apply to the kind of `spec`.
    ValueError
        If `count` is not positive.
    """
    sheet = SheetTag(sheet)
    count = int(count)
    if count < 1:
        raise ValueError("The number of points must be positive.")
    if spec.kind not in _TWO_SHEET_KINDS and sheet is not SheetTag.WHOLE:
        raise KindMismatchError(
            f"A {spec.kind.value} has a single sheet; use {SheetTag.WHOLE.value}."
        )
    rng = np.random.default_rng(seed)
    u = random_directions(spec, count, rng, hull)
    flat = u is None
    if flat:
        u = np.zeros((count, spec.dim))

    if spec.kind is ConicKind.HYPERBOLOID:
        margin = DEFAULT_CONSTANTS[Constants.SAMPLER_MARGIN]
        bound = 0.5 * np.pi - margin
        alpha = rng.uniform(-bound, bound, count)
    elif spec.kind is ConicKind.ELLIPSOID:
        alpha = rng.uniform(0.0, 2.0 * np.pi, count)
        if flat:
            alpha = np.pi * rng.integers(0, 2, count)
    elif spec.kind is ConicKind.CONE:
        span = DEFAULT_CONSTANTS[Constants.CONE_SPAN]
        alpha = rng.uniform(-span, span, count)
    else:
        span = DEFAULT_CONSTANTS[Constants.PARABOLA_SPAN]
        alpha = rng.uniform(-span, span, count)
    if flat and spec.kind is not ConicKind.ELLIPSOID:
        alpha = np.zeros(count)

    if sheet is SheetTag.WHOLE and spec.kind in _TWO_SHEET_KINDS:
        sheets = np.where(rng.integers(0, 2, count) == 0, "Sheet1", "Sheet2")
    else:
        sheets = [sheet] * count
    return parametric_points(spec, u, alpha, sheets)


def asymptotic_cone(spec):
    """
    Asymptotic cone of a hyperboloid.

    Parameters
    ----------
    spec : ConicSpec
        Hyperboloid of two sheets.

    Returns
    -------
    ConicSpec
        Cone with the same center, axis and eccentricity.

    Raises
    ------
    KindMismatchError
        If `spec` is not a hyperboloid.
    """
    if spec.kind is not ConicKind.HYPERBOLOID:
        raise KindMismatchError("Only a hyperboloid has an asymptotic cone.")
    return cone_from_axis(spec.center, spec.axis, spec.eccentricity)
