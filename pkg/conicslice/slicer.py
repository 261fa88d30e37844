import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .conics import (
    ConicSpec,
    cone_from_axis,
    sample_points,
)
from .geometry import (
    Hyperplane,
    as_vector,
    orthogonal_direction,
)
from .settings import (
    DEFAULT_CONSTANTS,
    ConicKind,
    Constants,
    SheetTag,
    SliceClass,
    Tolerances,
)
from .utils import (
    DegenerateOutputError,
    DependentVectorError,
    EmptyIntersectionError,
    check_dimensions,
    resolve_tolerances,
)

logger = logging.getLogger(__name__)

__all__ = [
    "Hyperplane",
    "SliceFrame",
    "SliceResult",
    "slice_frame",
    "classify_slice",
    "slice_conic",
    "sample_slice",
    "vertex_path",
]


@dataclass(frozen=True, eq=False)
class SliceFrame:
    """
    Frame of the intersection of a conic section with a hyperplane.

    Attributes
    ----------
    g1 : `numpy.ndarray` or None, shape (n,)
        Unit axis of the slice, which is the normalized component of the
        axis of the conic section orthogonal to the normal of the
        hyperplane. It is ``None`` if the two are parallel.
    rho : float
        Cosine ``g1 @ v`` of the angle between the slice axis and the axis.
    sigma : float
        Cosine ``h @ v`` of the angle between the normal and the axis.
    axis_aligned : bool
        Whether the normal and the axis are parallel.
    """

    g1: Optional[np.ndarray]
    rho: float
    sigma: float
    axis_aligned: bool


@dataclass(frozen=True, eq=False)
class SliceResult:
    """
    Intersection of a conic section with a hyperplane.

    The slice is expressed in ambient coordinates. Its affine hull is the
    intersection of the hyperplanes whose unit normals are the rows of
    `hull_basis` and that contain `center`.

    Attributes
    ----------
    slice_class : SliceClass
        Class of the intersection.
    conic : ConicSpec or None
        Conic section of the intersection. A ball is stored as an ellipsoid
        of zero focal distance, and a degenerate cone as a cone. It is
        ``None`` for a point, an empty set and a line of a cone.
    center : `numpy.ndarray` or None, shape (n,)
        Center of the slice (vertex for a parabolic slice, the point itself
        for a point slice, the apex for a degenerate cone).
    axis : `numpy.ndarray` or None, shape (n,)
        Axis of the slice, lying in the hyperplane.
    hull_basis : `numpy.ndarray`, shape (k, n)
        Orthonormal normals of the affine hull of the slice.
    h_hat : float
        Signed offset of the hyperplane from the center of the sliced conic
        section, measured in the affine hull of that conic section.
    tilde_c : float or None
        Shift of the slice center along the slice axis.
    radius : float or None
        Radius of a ball slice.
    frame : SliceFrame
        Frame of the intersection.
    """

    slice_class: SliceClass
    conic: Optional[ConicSpec]
    center: Optional[np.ndarray]
    axis: Optional[np.ndarray]
    hull_basis: np.ndarray
    h_hat: float
    tilde_c: Optional[float]
    radius: Optional[float]
    frame: SliceFrame

    def __post_init__(self):
        object.__setattr__(self, "slice_class", SliceClass(self.slice_class))
        for name in ("center", "axis", "hull_basis"):
            value = getattr(self, name)
            if value is not None:
                value = np.array(value, dtype=float)
                value.flags.writeable = False
                object.__setattr__(self, name, value)

    @property
    def dim(self):
        """
        Dimension of the affine hull of the slice.

        Returns
        -------
        int
        """
        return self.hull_basis.shape[1] - self.hull_basis.shape[0]

    @property
    def is_degenerate(self):
        """
        Whether the slice is a point or a degenerate cone.

        Returns
        -------
        bool
        """
        return self.slice_class in (SliceClass.POINT, SliceClass.DEGENERATE_CONE)


def slice_frame(v, h, tol=None):
    """
    Compute the frame of the intersection of a conic with a hyperplane.

    Parameters
    ----------
    v : array_like, shape (n,)
        Unit axis of the conic section.
    h : array_like, shape (n,)
        Unit normal of the hyperplane.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    SliceFrame
        Frame of the intersection.

    Examples
    --------
    >>> from conicslice.slicer import slice_frame
    >>> frame = slice_frame([0.0, 0.0, 1.0], [1.0, 0.0, 0.0])
    >>> frame.rho, frame.sigma
    (1.0, 0.0)
    """
    tol = resolve_tolerances(tol)
    v = as_vector(v, "v")
    h = as_vector(h, "h")
    check_dimensions(v, h)
    sigma = float(np.dot(h, v))
    if 1.0 - sigma ** 2.0 <= tol[Tolerances.ALIGNED]:
        return SliceFrame(None, 0.0, float(np.sign(sigma)), True)
    g = v - sigma * h
    rho = float(np.linalg.norm(g))
    g1 = g / rho
    g1.flags.writeable = False
    return SliceFrame(g1, rho, sigma, False)


def _restrict(plane, center, hull, tol):
    """
    Restrict a hyperplane to the affine hull of a conic section.

    Returns the unit normal of the restriction, the signed offset of the
    restriction from the center, and the orthonormal hull.
    """
    dim = center.size
    h_hat = plane.h_hat(center)
    if hull is None or np.size(hull) == 0:
        return plane.normal, h_hat, np.empty((0, dim))
    hull = np.reshape(np.asarray(hull, dtype=float), (-1, dim))
    residual = np.copy(plane.normal)
    for _ in range(2):
        residual -= hull.T @ (hull @ residual)
    norm = np.linalg.norm(residual)
    if norm <= tol[Tolerances.ZERO]:
        raise DependentVectorError(
            "The hyperplane is parallel to the affine hull of the conic."
        )
    return residual / norm, h_hat / norm, hull


def _ball_axis(normal, hull):
    return orthogonal_direction(np.vstack([hull, normal]), normal.size)


def _result(slice_class, frame, hull, normal, h_hat, conic=None, center=None,
            axis=None, tilde_c=None, radius=None):
    return SliceResult(
        slice_class,
        conic,
        center,
        axis,
        np.vstack([hull, normal]),
        float(h_hat),
        tilde_c if tilde_c is None else float(tilde_c),
        radius if radius is None else float(radius),
        frame,
    )


def _slice_aligned(spec, frame, hull, normal, h_hat, tol):
    # Substituting x - c = h_hat * h + w in the quadratic equation gives the
    # squared cross radius of the slice.
    center = spec.center + h_hat * normal
    if spec.kind is ConicKind.PARABOLOID:
        radius2 = 4.0 * spec.c_param * frame.sigma * h_hat
        bound = abs(radius2)
    else:
        scaled = (spec.eccentricity ** 2.0 - 1.0) * h_hat ** 2.0
        radius2 = scaled - spec.k_param
        bound = abs(scaled) + abs(spec.k_param)
    bound = tol[Tolerances.RADIUS] * bound + tol[Tolerances.ZERO] * spec.scale ** 2.0
    if radius2 > bound:
        radius = np.sqrt(radius2)
        axis = _ball_axis(normal, hull)
        conic = ConicSpec(ConicKind.ELLIPSOID, center, axis, 0.0, a=radius)
        return _result(
            SliceClass.BALL,
            frame,
            hull,
            normal,
            h_hat,
            conic=conic,
            center=center,
            axis=axis,
            tilde_c=0.0,
            radius=radius,
        )
    if radius2 >= -bound:
        return _result(
            SliceClass.POINT,
            frame,
            hull,
            normal,
            h_hat,
            center=center,
            tilde_c=0.0,
            radius=0.0,
        )
    return _result(SliceClass.EMPTY, frame, hull, normal, h_hat)


def _slice_paraboloid(spec, frame, hull, normal, h_hat, tol):
    rho, sigma, g1 = frame.rho, frame.sigma, frame.g1
    c_param = spec.c_param
    if abs(sigma) <= tol[Tolerances.BAND]:
        tilde_c = -h_hat ** 2.0 / (4.0 * c_param)
        center = spec.center + h_hat * normal - tilde_c * g1
        conic = ConicSpec(ConicKind.PARABOLOID, center, g1, c_param)
        return _result(
            SliceClass.PARABOLIC,
            frame,
            hull,
            normal,
            h_hat,
            conic=conic,
            center=center,
            axis=g1,
            tilde_c=tilde_c,
        )
    gap = c_param * rho ** 2.0 + sigma * h_hat
    bound = tol[Tolerances.BOUNDARY] * (c_param * rho ** 2.0 + abs(sigma * h_hat))
    bound += tol[Tolerances.ZERO] * spec.scale
    # rho ** 2 - 1 = -sigma ** 2, which keeps its accuracy for small sigma.
    tilde_c = -rho * (sigma * h_hat + 2.0 * c_param) / sigma ** 2.0
    center = spec.center + h_hat * normal - tilde_c * g1
    if gap > bound:
        a_hat = np.sqrt(4.0 * c_param * gap) / sigma ** 2.0
        b_hat = a_hat * abs(sigma)
        conic = ConicSpec(
            ConicKind.ELLIPSOID,
            center,
            g1,
            a_hat * rho,
            a=a_hat,
            b=b_hat,
            eccentricity=rho,
        )
        return _result(
            SliceClass.ELLIPTIC,
            frame,
            hull,
            normal,
            h_hat,
            conic=conic,
            center=center,
            axis=g1,
            tilde_c=tilde_c,
        )
    if gap >= -bound:
        return _result(
            SliceClass.POINT,
            frame,
            hull,
            normal,
            h_hat,
            center=center,
            axis=g1,
            tilde_c=tilde_c,
        )
    return _result(SliceClass.EMPTY, frame, hull, normal, h_hat)


def _slice_quadric(spec, frame, hull, normal, h_hat, tol):
    rho, sigma, g1 = frame.rho, frame.sigma, frame.g1
    eps = spec.eccentricity
    k_param = spec.k_param
    eps_rho = eps * rho
    is_zero_offset = abs(h_hat) <= tol[Tolerances.ZERO] * spec.scale
    band = tol[Tolerances.BAND] * (1.0 + eps_rho)

    if spec.kind is not ConicKind.ELLIPSOID and abs(eps_rho - 1.0) <= band:
        if is_zero_offset:
            if spec.kind is ConicKind.CONE:
                # The hyperplane is tangent to the cone along a ruling.
                return _result(
                    SliceClass.DEGENERATE_CONE,
                    frame,
                    hull,
                    normal,
                    h_hat,
                    center=spec.center,
                    axis=g1,
                    tilde_c=0.0,
                )
            return _result(SliceClass.EMPTY, frame, hull, normal, h_hat)
        c_focal = 0.5 * eps * sigma * h_hat
        tilde_c = ((eps * sigma) ** 2.0 - 1.0) * h_hat ** 2.0 - k_param
        tilde_c /= 2.0 * eps * sigma * h_hat
        center = spec.center + h_hat * normal - tilde_c * g1
        axis = g1 if c_focal > 0.0 else -g1
        conic = ConicSpec(ConicKind.PARABOLOID, center, axis, abs(c_focal))
        return _result(
            SliceClass.PARABOLIC,
            frame,
            hull,
            normal,
            h_hat,
            conic=conic,
            center=center,
            axis=axis,
            tilde_c=tilde_c,
        )

    denom = eps_rho ** 2.0 - 1.0
    tilde_c = eps ** 2.0 * rho * sigma * h_hat / denom
    center = spec.center + h_hat * normal - tilde_c * g1
    if denom > 0.0:
        if spec.kind is ConicKind.CONE and is_zero_offset:
            conic = cone_from_axis(spec.center, g1, eps_rho, tol)
            return _result(
                SliceClass.DEGENERATE_CONE,
                frame,
                hull,
                normal,
                h_hat,
                conic=conic,
                center=spec.center,
                axis=g1,
                tilde_c=0.0,
            )
        numer = k_param * denom + h_hat ** 2.0 * (eps ** 2.0 - 1.0)
        a_hat = np.sqrt(numer) / denom
        conic = ConicSpec(
            ConicKind.HYPERBOLOID,
            center,
            g1,
            a_hat * eps_rho,
            a=a_hat,
            b=a_hat * np.sqrt(denom),
            eccentricity=eps_rho,
        )
        return _result(
            SliceClass.HYPERBOLIC,
            frame,
            hull,
            normal,
            h_hat,
            conic=conic,
            center=center,
            axis=g1,
            tilde_c=tilde_c,
        )

    numer = k_param * denom + h_hat ** 2.0 * (eps ** 2.0 - 1.0)
    bound = abs(k_param * denom) + h_hat ** 2.0 * abs(eps ** 2.0 - 1.0)
    bound = tol[Tolerances.BOUNDARY] * bound + tol[Tolerances.ZERO] * spec.scale ** 2.0
    if numer > bound:
        a_hat = np.sqrt(numer) / abs(denom)
        conic = ConicSpec(
            ConicKind.ELLIPSOID,
            center,
            g1,
            a_hat * eps_rho,
            a=a_hat,
            b=a_hat * np.sqrt(-denom),
            eccentricity=eps_rho,
        )
        return _result(
            SliceClass.ELLIPTIC,
            frame,
            hull,
            normal,
            h_hat,
            conic=conic,
            center=center,
            axis=g1,
            tilde_c=tilde_c,
        )
    if numer >= -bound:
        return _result(
            SliceClass.POINT,
            frame,
            hull,
            normal,
            h_hat,
            center=center,
            axis=g1,
            tilde_c=tilde_c,
        )
    return _result(SliceClass.EMPTY, frame, hull, normal, h_hat)


def _slice(spec, plane, tol, hull):
    check_dimensions(spec.center, plane.normal)
    normal, h_hat, hull = _restrict(plane, spec.center, hull, tol)
    frame = slice_frame(spec.axis, normal, tol)
    if frame.axis_aligned:
        result = _slice_aligned(spec, frame, hull, normal, h_hat, tol)
    elif spec.kind is ConicKind.PARABOLOID:
        result = _slice_paraboloid(spec, frame, hull, normal, h_hat, tol)
    else:
        result = _slice_quadric(spec, frame, hull, normal, h_hat, tol)
    logger.debug(
        "Slice of a %s: %s (rho=%.6g, sigma=%.6g, h_hat=%.6g).",
        spec.kind.value,
        result.slice_class.value,
        frame.rho,
        frame.sigma,
        h_hat,
    )
    return result


def classify_slice(spec, plane, tol=None, hull=None):
    """
    Classify the intersection of a conic section with a hyperplane.

    Parameters
    ----------
    spec : ConicSpec
        Conic section.
    plane : Hyperplane
        Slicing hyperplane.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.
    hull : array_like, shape (k, n), optional
        Orthonormal normals of the affine hull the conic section lives in.

    Returns
    -------
    SliceClass
        Class of the intersection.

    Notes
    -----
    Let ``rho`` be the cosine of the angle between the axis of the conic
    section and the hyperplane. For a hyperboloid or a cone, the slice is
    hyperbolic if ``eps * rho > 1``, parabolic if ``eps * rho = 1``, and
    elliptic, a point or empty otherwise. The equality is tested with the
    relative band tolerance.

    Examples
    --------
    >>> import numpy as np
    >>> from conicslice.conics import cone_from_axis
    >>> from conicslice.slicer import Hyperplane, classify_slice
    >>> cone = cone_from_axis([0.0, 0.0, 0.0], [0.0, 0.0, 1.0], 2.0)
    >>> plane = Hyperplane([0.0, 0.5, np.sqrt(0.75)], 1.0)
    >>> classify_slice(cone, plane).value
    'ParabolicSlice'
    """
    tol = resolve_tolerances(tol)
    return _slice(spec, plane, tol, hull).slice_class


def slice_conic(spec, plane, tol=None, hull=None):
    """
    Intersect a conic section with a hyperplane.

    Parameters
    ----------
    spec : ConicSpec
        Conic section.
    plane : Hyperplane
        Slicing hyperplane.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.
    hull : array_like, shape (k, n), optional
        Orthonormal normals of the affine hull the conic section lives in,
        such as the `hull_basis` of a previous slice. The hyperplane is
        restricted to that affine hull.

    Returns
    -------
    SliceResult
        Intersection, of dimension one less than the one of `spec`.

    Raises
    ------
    EmptyIntersectionError
        If the intersection is empty.
    DegenerateOutputError
        If the intersection is a point or a degenerate cone. The tagged
        result is available as the `result` attribute of the exception.
    DependentVectorError
        If the hyperplane is parallel to the affine hull of `spec`.

    Examples
    --------
    >>> from conicslice.conics import ConicSpec
    >>> from conicslice.slicer import Hyperplane, slice_conic
    >>> spec = ConicSpec.from_parameters(
    ...     "HyperboloidTwoSheets", [0.0, 0.0, 0.0], [0.0, 0.0, 1.0], 2.0, 1.0
    ... )
    >>> result = slice_conic(spec, Hyperplane([1.0, 0.0, 0.0], 1.0))
    >>> result.slice_class.value, round(result.conic.a ** 2, 12)
    ('HyperbolicSlice', 1.333333333333)
    """
    tol = resolve_tolerances(tol)
    result = _slice(spec, plane, tol, hull)
    if result.slice_class is SliceClass.EMPTY:
        raise EmptyIntersectionError(
            f"The hyperplane does not intersect the {spec.kind.value}."
        )
    if result.is_degenerate:
        raise DegenerateOutputError(
            f"The slice of the {spec.kind.value} is a "
            f"{result.slice_class.value}.",
            result,
        )
    return result


def sample_slice(result, count, seed=None):
    """
    Sample points on a slice.

    The points stay in the affine hull of the slice.

    Parameters
    ----------
    result : SliceResult
        Nonempty slice.
    count : int
        Number of points.
    seed : int or `numpy.random.Generator`, optional
        Seed of the random generator.

    Returns
    -------
    `numpy.ndarray`, shape (count, n)
        Points on the slice.

    Raises
    ------
    EmptyIntersectionError
        If the slice is empty.
    """
    count = int(count)
    if count < 1:
        raise ValueError("The number of points must be positive.")
    if result.slice_class is SliceClass.EMPTY:
        raise EmptyIntersectionError("An empty slice has no point.")
    if result.conic is not None:
        sheet = SheetTag.WHOLE
        return sample_points(result.conic, sheet, count, seed, result.hull_basis)
    if result.slice_class is SliceClass.DEGENERATE_CONE:
        rng = np.random.default_rng(seed)
        span = DEFAULT_CONSTANTS[Constants.CONE_SPAN]
        t = rng.uniform(-span, span, count)
        return result.center + t[:, np.newaxis] * result.axis
    return np.tile(result.center, (count, 1))


def _near_vertex(result):
    if result.slice_class in (SliceClass.HYPERBOLIC, SliceClass.ELLIPTIC):
        conic = result.conic
        shifts = (conic.a - result.tilde_c, -conic.a - result.tilde_c)
        shift = min(shifts, key=abs)
        return conic.center + (shift + result.tilde_c) * conic.axis
    return np.copy(result.center)


def vertex_path(spec, plane_family, rhos, tol=None):
    """
    Follow the near-side vertex of a family of slices.

    Parameters
    ----------
    spec : ConicSpec
        Conic section.
    plane_family : callable
        Function ``plane_family(rho) -> Hyperplane``.
    rhos : array_like, shape (m,)
        Parameters of the family.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    `numpy.ndarray`, shape (m, n)
        Near-side vertices. For a hyperbolic or an elliptic slice, it is the
        vertex closest to the point ``c + h_hat * h`` of the slicing
        hyperplane, which remains bounded when the slice turns parabolic.
        Otherwise, it is the center of the slice.

    Raises
    ------
    EmptyIntersectionError
        If a slice of the family is empty.
    DegenerateOutputError
        If a slice of the family is degenerate.
    """
    path = []
    for rho in np.atleast_1d(np.asarray(rhos, dtype=float)):
        result = slice_conic(spec, plane_family(float(rho)), tol)
        path.append(_near_vertex(result))
    return np.array(path)
