import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .conics import ConicSpec, hyperboloid_from_foci
from .geometry import Hyperplane, as_vector, normalize
from .settings import SheetTag, Tolerances
from .utils import (
    AffineDependenceError,
    AllRadiiEqualError,
    CoincidentCentersError,
    ContainedBallError,
    EqualRadiiError,
    InvalidConstantError,
    ZeroVectorError,
    check_dimensions,
    get_scale,
    resolve_tolerances,
)

logger = logging.getLogger(__name__)


class TripleCase(str, Enum):
    """
    Radius orderings of a ball triple ``r_j >= r_k >= r_l``.
    """

    DISTINCT = "distinct"
    EQUAL_SMALLEST = "r_k=r_l"
    EQUAL_LARGEST = "r_j=r_k"


@dataclass(frozen=True, eq=False)
class Ball:
    """
    Closed Euclidean ball.

    Attributes
    ----------
    center : `numpy.ndarray`, shape (n,)
        Center of the ball.
    radius : float
        Nonnegative radius of the ball.
    """

    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center, "center"))
        radius = float(self.radius)
        if not np.isfinite(radius) or radius < 0.0:
            raise InvalidConstantError("The radius of a ball must be nonnegative.")
        object.__setattr__(self, "radius", radius)

    @property
    def dim(self):
        """
        Ambient dimension.

        Returns
        -------
        int
        """
        return self.center.size

    def shifted(self, shift):
        """
        Ball with the same center and the radius increased by `shift`.
        """
        return Ball(self.center, self.radius + shift)


def as_ball(ball):
    """
    Convert a ball or a ``(center, radius)`` pair into a `Ball`.
    """
    if isinstance(ball, Ball):
        return ball
    center, radius = ball
    return Ball(center, radius)


def tangent_radius(x, ball):
    """
    Radius of the ball centered at a point that contains a ball tangentially.

    Parameters
    ----------
    x : array_like, shape (n,) or (m, n)
        Centers.
    ball : Ball
        Ball to contain.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)
        ``norm(ball.center - x) + ball.radius``.

    Examples
    --------
    >>> from conicslice.bisectors import Ball, tangent_radius
    >>> float(tangent_radius([1.0, 0.0], Ball([0.0, 0.0], 2.0)))
    3.0
    """
    ball = as_ball(ball)
    x = np.asarray(x, dtype=float)
    return np.linalg.norm(ball.center - x, axis=-1) + ball.radius


@dataclass(frozen=True, eq=False)
class PlaneBisector:
    """
    Bisector of two balls of equal radii, which is a hyperplane.

    Attributes
    ----------
    plane : Hyperplane
        Bisecting hyperplane, with normal pointing toward `larger`.
    larger : Ball
        First ball of the pair.
    smaller : Ball
        Second ball of the pair.
    """

    plane: Hyperplane
    larger: Ball
    smaller: Ball

    @property
    def axis(self):
        """
        Unit normal of the bisector, from `smaller` toward `larger`.
        """
        return self.plane.normal

    @property
    def directrix_point(self):
        """
        Midpoint of the centers, which lies on the bisector.
        """
        return 0.5 * (self.larger.center + self.smaller.center)

    def residual(self, x):
        """
        Difference of the tangent radii at one or several points.
        """
        return tangent_radius(x, self.larger) - tangent_radius(x, self.smaller)


@dataclass(frozen=True, eq=False)
class SheetBisector:
    """
    Bisector of two balls of different radii, which is a hyperboloid sheet.

    Attributes
    ----------
    conic : ConicSpec
        Hyperboloid of two sheets whose first focal point is the center of
        `larger`, and whose metric constant is the difference of the radii.
    sheet : SheetTag
        Sheet of the bisector, which is the one closest to the center of
        `larger`.
    larger : Ball
        Ball of larger radius.
    smaller : Ball
        Ball of smaller radius.
    """

    conic: ConicSpec
    sheet: SheetTag
    larger: Ball
    smaller: Ball

    @property
    def axis(self):
        """
        Unit axis of the hyperboloid, from `smaller` toward `larger`.
        """
        return self.conic.axis

    @property
    def eps_axis(self):
        """
        Scaled axis ``eps * v``, equal to
        ``(p_j - p_k) / (r_j - r_k)``.
        """
        return self.conic.eccentricity * self.conic.axis

    @property
    def directrix_point(self):
        """
        Intersection of the directrix of the sheet with the axis.
        """
        return self.conic.directrix_points[0]

    @property
    def vertex(self):
        """
        Vertex of the sheet, center of the minimum ball containing both.
        """
        return self.conic.vertices[0]

    def residual(self, x):
        """
        Difference of the tangent radii at one or several points.
        """
        return tangent_radius(x, self.larger) - tangent_radius(x, self.smaller)


Bisector = Union[PlaneBisector, SheetBisector]


def _order_pair(bj, bk):
    bj = as_ball(bj)
    bk = as_ball(bk)
    check_dimensions(bj.center, bk.center)
    if bk.radius > bj.radius:
        return bk, bj
    return bj, bk


def _equal_radii(r1, r2, tol):
    return abs(r1 - r2) <= tol[Tolerances.RADIUS] * max(1.0, r1, r2)


def bisector(bj, bk, tol=None):
    """
    Bisector of two balls.

    The bisector is the set of centers ``x`` of the balls that contain both
    balls tangentially, i.e.,
    ``norm(p_j - x) + r_j = norm(p_k - x) + r_k``.

    Parameters
    ----------
    bj, bk : Ball
        Balls. They are reordered so that the first one has the larger
        radius.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    {PlaneBisector, SheetBisector}
        Hyperplane if the radii are equal, and otherwise the sheet of a
        hyperboloid of two sheets closest to the larger ball.

    Raises
    ------
    CoincidentCentersError
        If the centers coincide.
    ContainedBallError
        If one ball contains the other one.

    Examples
    --------
    >>> from conicslice.bisectors import Ball, bisector
    >>> sheet = bisector(Ball([0.0, 0.0], 2.0), Ball([3.0, 0.0], 1.0))
    >>> sheet.conic.eccentricity
    3.0
    """
    tol = resolve_tolerances(tol)
    larger, smaller = _order_pair(bj, bk)
    diff = larger.center - smaller.center
    dist = np.linalg.norm(diff)
    scale = get_scale(larger.center, smaller.center, larger.radius)
    if dist <= tol[Tolerances.ZERO] * scale:
        raise CoincidentCentersError("The centers of the balls coincide.")
    if _equal_radii(larger.radius, smaller.radius, tol):
        normal = diff / dist
        offset = 0.5 * np.dot(diff, larger.center + smaller.center) / dist
        return PlaneBisector(Hyperplane(normal, offset), larger, smaller)
    two_a = larger.radius - smaller.radius
    if two_a >= dist - tol[Tolerances.BOUNDARY] * max(1.0, dist, two_a):
        raise ContainedBallError("One ball contains the other one.")
    conic = hyperboloid_from_foci(larger.center, smaller.center, two_a, tol)
    return SheetBisector(conic, SheetTag.SHEET1, larger, smaller)


def min_containing_two(bj, bk, tol=None):
    """
    Minimum ball containing two balls.

    Parameters
    ----------
    bj, bk : Ball
        Balls.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    Ball
        Minimum containing ball. Its center is the vertex of the bisector
        sheet (the midpoint of the centers for equal radii), and it is the
        larger ball if it contains the other one.
    """
    tol = resolve_tolerances(tol)
    larger, smaller = _order_pair(bj, bk)
    dist = np.linalg.norm(larger.center - smaller.center)
    two_a = larger.radius - smaller.radius
    if two_a >= dist - tol[Tolerances.BOUNDARY] * max(1.0, dist, two_a):
        return larger
    bis = bisector(larger, smaller, tol)
    if isinstance(bis, PlaneBisector):
        return Ball(bis.directrix_point, 0.5 * dist + larger.radius)
    return Ball(bis.vertex, tangent_radius(bis.vertex, larger))


@dataclass(frozen=True, eq=False)
class TripleHyperplane:
    """
    Hyperplane containing the pairwise intersections of the bisectors of a
    ball triple.

    Attributes
    ----------
    plane : Hyperplane
        The hyperplane.
    d_point : `numpy.ndarray`, shape (n,)
        Point of the hyperplane. For distinct radii, it is the intersection
        of the directrices of the two bisectors involving the largest ball
        within the affine hull of the centers. Otherwise, it is the midpoint
        of the two centers of equal radii.
    u_t : `numpy.ndarray` or None, shape (n,)
        Unit vector of the affine hull of the centers, orthogonal to the axis
        of the bisector of the two largest balls, along which `d_point` is
        found. It is ``None`` if the radii are not distinct.
    source_case : TripleCase
        Radius ordering that produced the hyperplane.
    balls : tuple of Ball
        Balls ordered by nonincreasing radii.
    """

    plane: Hyperplane
    d_point: np.ndarray
    u_t: Optional[np.ndarray]
    source_case: TripleCase
    balls: tuple

    def __post_init__(self):
        object.__setattr__(self, "d_point", as_vector(self.d_point, "d_point"))
        if self.u_t is not None:
            object.__setattr__(self, "u_t", as_vector(self.u_t, "u_t"))
        object.__setattr__(self, "source_case", TripleCase(self.source_case))


def order_balls(balls):
    """
    Order balls by nonincreasing radii, ties broken by input position.

    Parameters
    ----------
    balls : list of Ball
        Balls.

    Returns
    -------
    list of int
        Positions of the balls in the order.
    """
    return sorted(range(len(balls)), key=lambda i: (-balls[i].radius, i))


def check_affine_independence(centers, tol=None):
    """
    Check that points are affinely independent.

    Parameters
    ----------
    centers : array_like, shape (m, n)
        Points.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Raises
    ------
    AffineDependenceError
        If the points are affinely dependent.
    """
    tol = resolve_tolerances(tol)
    centers = np.atleast_2d(np.asarray(centers, dtype=float))
    if centers.shape[0] < 2:
        return
    diffs = centers[1:] - centers[0]
    if diffs.shape[0] > diffs.shape[1]:
        raise AffineDependenceError(
            f"{centers.shape[0]} points are affinely dependent in "
            f"dimension {centers.shape[1]}."
        )
    singular = np.linalg.svd(diffs, compute_uv=False)
    if singular[-1] <= tol[Tolerances.BOUNDARY] * get_scale(centers):
        raise AffineDependenceError("The centers are affinely dependent.")


def directrix_meet(start, direction, normal, point, tol=None):
    """
    Intersect a line with a hyperplane.

    Parameters
    ----------
    start : array_like, shape (n,)
        Point of the line.
    direction : array_like, shape (n,)
        Unit direction of the line.
    normal : array_like, shape (n,)
        Normal of the hyperplane.
    point : array_like, shape (n,)
        Point of the hyperplane.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Point ``start + t * direction`` with ``normal @ (x - point) = 0``.

    Raises
    ------
    AffineDependenceError
        If the line is parallel to the hyperplane.
    """
    tol = resolve_tolerances(tol)
    start = np.asarray(start, dtype=float)
    direction = np.asarray(direction, dtype=float)
    denom = np.dot(normal, direction)
    if abs(denom) <= tol[Tolerances.ZERO]:
        raise AffineDependenceError("The directrices do not meet.")
    return start + (np.dot(normal, np.asarray(point) - start) / denom) * direction


def _ordered_triple(bj, bk, bl, tol):
    balls = [as_ball(bj), as_ball(bk), as_ball(bl)]
    check_dimensions(*(ball.center for ball in balls))
    balls = tuple(balls[i] for i in order_balls(balls))
    check_affine_independence([ball.center for ball in balls], tol)
    if _equal_radii(balls[0].radius, balls[2].radius, tol):
        raise AllRadiiEqualError(
            "The radii are equal; use the plane bisectors directly."
        )
    return balls


def symmetric_normal(bj, bk, bl, tol=None):
    """
    Closed form of the hyperplane of a ball triple with distinct radii.

    Parameters
    ----------
    bj, bk, bl : Ball
        Balls. They are ordered by nonincreasing radii.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Unnormalized normal
        ``[r_j (p_l - p_k) + r_k (p_j - p_l) + r_l (p_k - p_j)]
        / ((r_j - r_k) (r_j - r_l))``.
    float
        Right-hand side
        ``[r_j (|p_l|^2 - |p_k|^2) + r_k (|p_j|^2 - |p_l|^2)
        + r_l (|p_k|^2 - |p_j|^2)] / (2 (r_j - r_k) (r_j - r_l))
        - (r_k - r_l) / 2``.

    Raises
    ------
    AffineDependenceError
        If the centers are affinely dependent.
    EqualRadiiError
        If two radii are equal.
    """
    tol = resolve_tolerances(tol)
    j, k, l = _ordered_triple(bj, bk, bl, tol)
    if _equal_radii(j.radius, k.radius, tol) or _equal_radii(k.radius, l.radius, tol):
        raise EqualRadiiError("The closed form requires distinct radii.")
    pj, pk, pl = j.center, k.center, l.center
    rj, rk, rl = j.radius, k.radius, l.radius
    denom = (rj - rk) * (rj - rl)
    normal = (rj * (pl - pk) + rk * (pj - pl) + rl * (pk - pj)) / denom
    sj, sk, sl = pj @ pj, pk @ pk, pl @ pl
    rhs = (rj * (sl - sk) + rk * (sj - sl) + rl * (sk - sj)) / (2.0 * denom)
    return normal, float(rhs - 0.5 * (rk - rl))


def triple_hyperplane(bj, bk, bl, tol=None, debug=False):
    """
    Hyperplane of a ball triple.

    For balls with radii ``r_j >= r_k >= r_l`` and ``r_j > r_l``, the
    intersection of any two of the three pairwise bisectors equals the
    intersection of either of them with this hyperplane.

    Parameters
    ----------
    bj, bk, bl : Ball
        Balls. They are ordered by nonincreasing radii, ties broken by the
        input order.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.
    debug : bool, optional
        Whether to check the hyperplane against `symmetric_normal`.

    Returns
    -------
    TripleHyperplane
        The hyperplane and the point it is built from.

    Raises
    ------
    AffineDependenceError
        If the centers are affinely dependent.
    AllRadiiEqualError
        If the three radii are equal.
    ContainedBallError
        If one ball contains another one.

    Examples
    --------
    >>> import numpy as np
    >>> from conicslice.bisectors import Ball, triple_hyperplane
    >>> triple = triple_hyperplane(
    ...     Ball([0.0, 0.0], 3.0), Ball([4.0, 0.0], 2.0), Ball([0.0, 3.0], 1.0)
    ... )
    >>> np.round(triple.plane.normal * 25.0 / -triple.plane.offset, 12)
    array([-16.,   6.])
    """
    tol = resolve_tolerances(tol)
    balls = _ordered_triple(bj, bk, bl, tol)
    j, k, l = balls
    b_jk = bisector(j, k, tol)
    b_jl = bisector(j, l, tol)
    b_kl = bisector(k, l, tol)
    if isinstance(b_kl, PlaneBisector):
        return TripleHyperplane(
            b_kl.plane,
            b_kl.directrix_point,
            None,
            TripleCase.EQUAL_SMALLEST,
            balls,
        )
    if isinstance(b_jk, PlaneBisector):
        return TripleHyperplane(
            b_jk.plane,
            b_jk.directrix_point,
            None,
            TripleCase.EQUAL_LARGEST,
            balls,
        )

    h_t = b_jk.eps_axis - b_jl.eps_axis
    v_jk, v_jl = b_jk.axis, b_jl.axis
    try:
        u_t = normalize(h_t - np.dot(h_t, v_jk) * v_jk, tol)
    except ZeroVectorError as exc:
        raise AffineDependenceError("The bisector axes are parallel.") from exc
    d_point = directrix_meet(
        b_jk.directrix_point,
        u_t,
        v_jl,
        b_jl.directrix_point,
        tol,
    )
    plane = Hyperplane.through(d_point, h_t)
    result = TripleHyperplane(plane, d_point, u_t, TripleCase.DISTINCT, balls)
    if debug and not _equal_radii(k.radius, l.radius, tol):
        normal, rhs = symmetric_normal(j, k, l, tol)
        scale = np.linalg.norm(normal)
        other = Hyperplane(normal / scale, rhs / scale)
        assert np.allclose(other.normal, plane.normal, atol=1e-9)
        assert abs(other.offset - plane.offset) <= 1e-9 * get_scale(d_point)
    return result


def paired_hyperplanes(bj, bk, bl, tol=None):
    """
    Hyperplanes of a ball triple built from the other bisector pairs.

    For radii ``r_j > r_k > r_l``, the intersection of the bisectors of
    ``(j, k)`` and ``(k, l)`` lies on
    ``(eps_jk v_jk - eps_kl v_kl) @ x = (eps_jk v_jk - eps_kl v_kl) @ d_jkkl
    - 2 a_jk``, and the one of the bisectors of ``(j, l)`` and ``(k, l)`` on
    ``(eps_jl v_jl - eps_kl v_kl) @ x = (eps_jl v_jl - eps_kl v_kl) @ d_jlkl
    - 2 a_jk``, where ``d_jkkl`` and ``d_jlkl`` are the intersections of the
    corresponding directrices within the affine hull of the centers. Both
    hyperplanes equal the one of `triple_hyperplane`.

    Parameters
    ----------
    bj, bk, bl : Ball
        Balls. They are ordered by nonincreasing radii.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    Hyperplane
        Hyperplane from the pair ``(j, k)``, ``(k, l)``.
    Hyperplane
        Hyperplane from the pair ``(j, l)``, ``(k, l)``.

    Raises
    ------
    EqualRadiiError
        If two radii are equal.
    """
    tol = resolve_tolerances(tol)
    j, k, l = _ordered_triple(bj, bk, bl, tol)
    if _equal_radii(j.radius, k.radius, tol) or _equal_radii(k.radius, l.radius, tol):
        raise EqualRadiiError("The paired hyperplanes require distinct radii.")
    b_jk = bisector(j, k, tol)
    b_jl = bisector(j, l, tol)
    b_kl = bisector(k, l, tol)
    two_a_jk = j.radius - k.radius
    planes = []
    for first in (b_jk, b_jl):
        v_1, v_2 = first.axis, b_kl.axis
        direction = normalize(v_2 - np.dot(v_2, v_1) * v_1, tol)
        meet = directrix_meet(
            first.directrix_point,
            direction,
            v_2,
            b_kl.directrix_point,
            tol,
        )
        normal = first.eps_axis - b_kl.eps_axis
        planes.append(Hyperplane(normal, np.dot(normal, meet) - two_a_jk))
    return tuple(planes)
