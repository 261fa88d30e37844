import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import null_space, orth
from scipy.optimize import OptimizeResult

from .bisectors import (
    PlaneBisector,
    as_ball,
    bisector,
    check_affine_independence,
    directrix_meet,
    order_balls,
    tangent_radius,
    triple_hyperplane,
)
from .conics import ConicSpec, sample_points
from .geometry import orthonormalize_against
from .settings import (
    DEFAULT_CONSTANTS,
    PRINT_OPTIONS,
    ConicKind,
    Constants,
    ResultKind,
    SheetTag,
    Tolerances,
)
from .slicer import slice_conic
from .utils import (
    AffineDependenceError,
    ContainedBallError,
    DegenerateOutputError,
    DependentVectorError,
    EmptyIntersectionError,
    InvalidInputError,
    TooManyBallsError,
    check_dimensions,
    get_scale,
    resolve_tolerances,
)

logger = logging.getLogger(__name__)


def _frozen(value):
    if value is None:
        return None
    value = np.array(value, dtype=float)
    value.flags.writeable = False
    return value


@dataclass(frozen=True, eq=False)
class CascadeState:
    """
    Vectors and parameters of the running intersection after a step.

    The running intersection is the first bisector sheet intersected with
    the hyperplanes of the steps performed so far. Parameters that do not
    apply to its kind are ``None``.

    Attributes
    ----------
    k : int
        Step index, starting at one for the first bisector.
    conic : ConicSpec or None
        Running conic section, or ``None`` if it shrank to a point.
    v_k : `numpy.ndarray`, shape (n,)
        Principal axis.
    c_k : `numpy.ndarray`, shape (n,)
        Center.
    d_k : `numpy.ndarray` or None, shape (n,)
        Intersection point of the directrices carried along the steps.
    vertex : `numpy.ndarray`, shape (n,)
        Vertex ``c_k + a_k v_k``.
    eps_k : float
        Eccentricity.
    a_k, b_k, c_param_k : float or None
        Parameters of the running conic section.
    k_param : float or None
        Signed right-hand side ``c_k ** 2 - a_k ** 2`` of the quadratic form.
    hp_list : `numpy.ndarray`, shape (k - 1, n)
        Orthonormalized normals of the hyperplanes of the steps.
    u_prev : `numpy.ndarray` or None, shape (n,)
        Direction along which the directrix point moved at this step.
    v_1 : `numpy.ndarray`, shape (n,)
        Axis of the first bisector.
    rho_k, sigma_k, h_hat_k, tilde_c_k : float or None
        Slice quantities of the step.
    c_hat_k : float or None
        Focal parameter of a parabolic step.
    delegated : bool
        Whether the step was computed by `slice_conic` rather than by the
        recurrences, which happens for axis-aligned and paraboloid steps.
    """

    k: int
    conic: Optional[ConicSpec]
    v_k: np.ndarray
    c_k: np.ndarray
    d_k: Optional[np.ndarray]
    vertex: np.ndarray
    eps_k: float
    a_k: Optional[float]
    b_k: Optional[float]
    c_param_k: Optional[float]
    k_param: Optional[float]
    hp_list: np.ndarray
    u_prev: Optional[np.ndarray]
    v_1: np.ndarray
    rho_k: Optional[float] = None
    sigma_k: Optional[float] = None
    h_hat_k: Optional[float] = None
    tilde_c_k: Optional[float] = None
    c_hat_k: Optional[float] = None
    delegated: bool = False

    def __post_init__(self):
        for name in ("v_k", "c_k", "d_k", "vertex", "hp_list", "u_prev", "v_1"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    @property
    def is_point(self):
        """
        Whether the running intersection shrank to a point.

        Returns
        -------
        bool
        """
        return self.conic is None


@dataclass(frozen=True, eq=False)
class VertexCandidate:
    """
    Candidate point of the intersection of the bisectors.

    Attributes
    ----------
    point : `numpy.ndarray`, shape (n,)
        Candidate point.
    tangent_z : float
        Mean tangent radius of the balls at the point.
    residual : float
        Spread of the tangent radii at the point.
    valid : bool
        Whether the tangent radii agree within the tangency tolerance.
    """

    point: np.ndarray
    tangent_z: float
    residual: float
    valid: bool

    def __post_init__(self):
        object.__setattr__(self, "point", _frozen(self.point))


@dataclass(frozen=True, eq=False)
class CascadeResult:
    """
    Intersection of the pairwise bisectors of a set of balls.

    Attributes
    ----------
    kind : ResultKind
        Kind of the intersection.
    conic : ConicSpec or None
        Conic section of a ``Conic`` result, in ambient coordinates.
    hull_basis : `numpy.ndarray`, shape (k, n)
        Orthonormal normals of the affine hull of the intersection.
    flat_point : `numpy.ndarray` or None, shape (n,)
        Point of a ``Flat`` result closest to the center of the first ball.
    flat_basis : `numpy.ndarray` or None, shape (m, n)
        Orthonormal directions of a ``Flat`` result.
    sheet_vertex : `numpy.ndarray` or None, shape (n,)
        Vertex of the intersection on the side of the first bisector sheet,
        if it passes the tangency test.
    tangent_z : float or None
        Common tangent radius at `sheet_vertex`.
    candidates : tuple of VertexCandidate
        Vertices of the intersection with their tangency test.
    states : tuple of CascadeState
        Running states, one per step.
    balls : tuple of Ball
        Input balls, in the input order.
    order : tuple of int
        Positions of the balls sorted by nonincreasing radii.
    """

    kind: ResultKind
    conic: Optional[ConicSpec]
    hull_basis: np.ndarray
    flat_point: Optional[np.ndarray] = None
    flat_basis: Optional[np.ndarray] = None
    sheet_vertex: Optional[np.ndarray] = None
    tangent_z: Optional[float] = None
    candidates: tuple = field(default_factory=tuple)
    states: tuple = field(default_factory=tuple)
    balls: tuple = field(default_factory=tuple)
    order: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "kind", ResultKind(self.kind))
        for name in ("hull_basis", "flat_point", "flat_basis", "sheet_vertex"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    @property
    def dim(self):
        """
        Dimension of the intersection.

        Returns
        -------
        int
            Dimension of the affine hull of the conic section or of the flat,
            zero for a point result and minus one for an empty result.
        """
        if self.kind is ResultKind.EMPTY:
            return -1
        if self.kind is ResultKind.POINT_PAIR:
            return 0
        if self.kind is ResultKind.FLAT:
            return self.flat_basis.shape[0]
        return self.hull_basis.shape[1] - self.hull_basis.shape[0] - 1

    @property
    def valid_points(self):
        """
        Candidates that pass the tangency test.

        Returns
        -------
        `numpy.ndarray`, shape (m, n)
        """
        points = [cand.point for cand in self.candidates if cand.valid]
        if len(points) == 0:
            return np.empty((0, self.hull_basis.shape[1]))
        return np.array(points)


def tangency_spread(x, balls):
    """
    Spread of the tangent radii of balls at one or several points.

    Parameters
    ----------
    x : array_like, shape (n,) or (m, n)
        Points.
    balls : list of Ball
        Balls.

    Returns
    -------
    float or `numpy.ndarray`, shape (m,)
        Largest difference ``|z_a - z_b|`` between the tangent radii of two
        balls, which vanishes exactly on the intersection of the bisectors.
    `numpy.ndarray`, shape (n_balls,) or (m, n_balls)
        Tangent radii of the balls.
    """
    z = np.stack([tangent_radius(x, ball) for ball in balls], axis=-1)
    return np.max(z, axis=-1) - np.min(z, axis=-1), z


def tangency_bound(x, balls, tol):
    """
    Tolerance on `tangency_spread`, relative to the size of the balls and
    of the points.
    """
    x = np.asarray(x, dtype=float)
    base = get_scale(
        *(ball.center for ball in balls),
        np.array([ball.radius for ball in balls]),
    )
    size = np.max(np.abs(x), axis=-1, initial=0.0)
    return tol[Tolerances.TANGENCY] * np.maximum(base, size)


def _candidate(point, balls, tol):
    spread, z = tangency_spread(point, balls)
    bound = tangency_bound(point, balls, tol)
    return VertexCandidate(point, float(np.mean(z)), float(spread), bool(spread <= bound))


def _flat_result(balls, ordered, order, tol):
    # All the bisectors are hyperplanes (p_1 - p_k) @ x = (|p_1|^2 - |p_k|^2) / 2.
    first = ordered[0]
    p_1 = first.center
    matrix = np.array([p_1 - ball.center for ball in ordered[1:]])
    rhs = np.array([0.5 * (p_1 @ p_1 - ball.center @ ball.center) for ball in ordered[1:]])
    correction = np.linalg.lstsq(matrix, rhs - matrix @ p_1, rcond=None)[0]
    point = p_1 + correction
    flat_basis = null_space(matrix).T
    hull_basis = orth(matrix.T).T
    candidate = _candidate(point, balls, tol)
    logger.debug("Equal radii: flat of dimension %d.", flat_basis.shape[0])
    return CascadeResult(
        ResultKind.FLAT,
        None,
        hull_basis,
        flat_point=point,
        flat_basis=flat_basis,
        sheet_vertex=point,
        tangent_z=float(tangent_radius(point, first)),
        candidates=(candidate,),
        balls=tuple(balls),
        order=tuple(order),
    )


def _running_conic(kind, center, axis, a, eps, b):
    if kind is ConicKind.PARABOLOID:
        return ConicSpec(ConicKind.PARABOLOID, center, axis, a)
    return ConicSpec(kind, center, axis, a * eps, a=a, b=b, eccentricity=eps)


def _initial_state(base):
    conic = base.conic
    return CascadeState(
        k=1,
        conic=conic,
        v_k=conic.axis,
        c_k=conic.center,
        d_k=conic.directrix_points[0],
        vertex=conic.vertices[0],
        eps_k=conic.eccentricity,
        a_k=conic.a,
        b_k=conic.b,
        c_param_k=conic.c_param,
        k_param=conic.k_param,
        hp_list=np.empty((0, conic.dim)),
        u_prev=None,
        v_1=conic.axis,
    )


def _state_from_slice(state, result, hp_list, point=False):
    frame = result.frame
    conic = None if point else result.conic
    common = dict(
        k=state.k + 1,
        d_k=None,
        hp_list=hp_list,
        u_prev=None,
        v_1=state.v_1,
        rho_k=frame.rho,
        sigma_k=frame.sigma,
        h_hat_k=result.h_hat,
        tilde_c_k=result.tilde_c,
        delegated=True,
    )
    axis = frame.g1 if frame.g1 is not None else result.axis
    if axis is None:
        axis = state.v_k
    if conic is None:
        return CascadeState(
            conic=None,
            v_k=axis,
            c_k=result.center,
            vertex=result.center,
            eps_k=state.eps_k * frame.rho,
            a_k=0.0,
            b_k=0.0,
            c_param_k=0.0,
            k_param=0.0,
            **common,
        )
    if conic.kind is ConicKind.PARABOLOID:
        return CascadeState(
            conic=conic,
            v_k=axis,
            c_k=conic.center,
            vertex=conic.center,
            eps_k=1.0,
            a_k=None,
            b_k=None,
            c_param_k=conic.c_param,
            k_param=None,
            c_hat_k=conic.c_param,
            **common,
        )
    return CascadeState(
        conic=conic,
        v_k=conic.axis,
        c_k=conic.center,
        vertex=conic.vertices[0],
        eps_k=conic.eccentricity,
        a_k=conic.a,
        b_k=conic.b,
        c_param_k=conic.c_param,
        k_param=conic.k_param,
        **common,
    )


def _delegate(state, plane, hp_list, tol):
    try:
        result = slice_conic(state.conic, plane, tol, hull=state.hp_list)
    except DegenerateOutputError as exc:
        return _state_from_slice(state, exc.result, hp_list, point=True)
    return _state_from_slice(state, result, hp_list)


def _step(state, b_1k, plane, tol):
    """
    Intersect the running conic section with the hyperplane of one step.
    """
    conic = state.conic
    if isinstance(b_1k, PlaneBisector):
        h_k = b_1k.axis
    else:
        h_k = plane.normal
    try:
        hp_k = orthonormalize_against(h_k, state.hp_list, tol)
    except DependentVectorError as exc:
        raise AffineDependenceError(
            "The hyperplane of a step is dependent on the previous ones."
        ) from exc
    hp_list = np.vstack([state.hp_list, hp_k])

    v_prev = state.v_k
    sigma = float(np.dot(v_prev, hp_k))
    aligned = 1.0 - sigma ** 2.0 <= tol[Tolerances.ALIGNED]
    if conic.kind is ConicKind.PARABOLOID or aligned:
        return _delegate(state, plane, hp_list, tol)

    vp = v_prev - sigma * hp_k
    rho = float(np.linalg.norm(vp))
    v_k = vp / rho
    u_prev = hp_k - sigma * v_prev
    u_prev /= np.linalg.norm(u_prev)

    c_prev = state.c_k
    d_k = None
    if state.d_k is not None:
        try:
            d_k = directrix_meet(
                state.d_k,
                u_prev,
                b_1k.axis,
                b_1k.directrix_point,
                tol,
            )
        except AffineDependenceError:
            d_k = None
    if d_k is not None:
        h_hat = float(np.dot(hp_k, d_k - c_prev))
    else:
        h_hat = plane.h_hat(c_prev) / float(np.dot(plane.normal, hp_k))

    eps_prev = state.eps_k
    k_prev = state.k_param
    eps_k = eps_prev * rho
    scale = conic.scale
    common = dict(
        k=state.k + 1,
        d_k=d_k,
        hp_list=hp_list,
        u_prev=u_prev,
        v_1=state.v_1,
        rho_k=rho,
        sigma_k=sigma,
        h_hat_k=h_hat,
    )

    if abs(eps_k - 1.0) <= tol[Tolerances.BAND] * (1.0 + eps_k):
        if abs(h_hat) <= tol[Tolerances.ZERO] * scale:
            raise EmptyIntersectionError(
                "The hyperplane of a step misses the running hyperboloid."
            )
        c_hat = 0.5 * eps_prev * sigma * h_hat
        tilde_c = ((eps_prev * sigma) ** 2.0 - 1.0) * h_hat ** 2.0 - k_prev
        tilde_c /= 2.0 * eps_prev * sigma * h_hat
        c_k = c_prev + h_hat * hp_k - tilde_c * v_k
        axis = v_k if c_hat > 0.0 else -v_k
        new = ConicSpec(ConicKind.PARABOLOID, c_k, axis, abs(c_hat))
        return CascadeState(
            conic=new,
            v_k=v_k,
            c_k=c_k,
            vertex=c_k,
            eps_k=1.0,
            a_k=None,
            b_k=None,
            c_param_k=abs(c_hat),
            k_param=None,
            tilde_c_k=tilde_c,
            c_hat_k=c_hat,
            **common,
        )

    denom = eps_k ** 2.0 - 1.0
    tilde_c = eps_prev ** 2.0 * rho * sigma * h_hat / denom
    numer = k_prev * denom + h_hat ** 2.0 * (eps_prev ** 2.0 - 1.0)
    c_k = c_prev + h_hat * hp_k - tilde_c * v_k
    if denom < 0.0:
        bound = abs(k_prev * denom) + h_hat ** 2.0 * abs(eps_prev ** 2.0 - 1.0)
        bound = tol[Tolerances.BOUNDARY] * bound + tol[Tolerances.ZERO] * scale ** 2.0
        if numer < -bound:
            raise EmptyIntersectionError(
                "The hyperplane of a step misses the running ellipsoid."
            )
        if numer <= bound:
            return CascadeState(
                conic=None,
                v_k=v_k,
                c_k=c_k,
                vertex=c_k,
                eps_k=eps_k,
                a_k=0.0,
                b_k=0.0,
                c_param_k=0.0,
                k_param=0.0,
                tilde_c_k=tilde_c,
                **common,
            )
    a_k = np.sqrt(numer) / abs(denom)
    b_k2 = a_k ** 2.0 * denom
    kind = ConicKind.HYPERBOLOID if denom > 0.0 else ConicKind.ELLIPSOID
    new = _running_conic(kind, c_k, v_k, a_k, eps_k, np.sqrt(abs(b_k2)))
    return CascadeState(
        conic=new,
        v_k=v_k,
        c_k=c_k,
        vertex=c_k + a_k * v_k,
        eps_k=eps_k,
        a_k=a_k,
        b_k=new.b,
        c_param_k=new.c_param,
        k_param=b_k2,
        tilde_c_k=tilde_c,
        **common,
    )


def _check_step(state, new, plane, tol):
    # The recurrences specialize the slice of the running conic section.
    try:
        result = slice_conic(state.conic, plane, tol, hull=state.hp_list)
        center = result.center
    except DegenerateOutputError as exc:
        center = exc.result.center
    scale = get_scale(center, new.c_k)
    assert np.allclose(center, new.c_k, rtol=0.0, atol=1e-8 * scale), (
        "The recurrences disagree with the slice of the running conic."
    )


def _log_state(state):
    with np.printoptions(**PRINT_OPTIONS):
        logger.debug(
            "Step %d: eps=%.6g, rho=%s, sigma=%s, h_hat=%s, center=%s.",
            state.k,
            state.eps_k,
            state.rho_k,
            state.sigma_k,
            state.h_hat_k,
            state.c_k,
        )


def _touching_pairs(ordered, tol):
    """
    Pairs ``(j, k)`` of positions in `ordered` such that ball ``j`` contains
    ball ``k`` and their boundaries touch.
    """
    pairs = []
    for j, k in itertools.combinations(range(len(ordered)), 2):
        larger, smaller = ordered[j], ordered[k]
        dist = np.linalg.norm(larger.center - smaller.center)
        two_a = larger.radius - smaller.radius
        margin = tol[Tolerances.BOUNDARY] * max(1.0, dist, two_a)
        if two_a > dist + margin:
            raise ContainedBallError("One ball contains the other one.")
        if two_a >= dist - margin:
            pairs.append((j, k))
    return pairs


def _touching_result(balls, ordered, order, pair, tol):
    """
    Intersection of the bisectors when two balls touch from inside.

    The bisector of such a pair is a ray: a ball contains both tangentially
    only if it touches them at their contact point, so that its center is
    ``p_j - mu * u`` with ``mu >= 0`` and its tangent radius is
    ``r_j + mu``, where ``u`` points from ``p_j`` to ``p_k``. Tangency to
    any other ball is linear in ``mu``.
    """
    larger, smaller = ordered[pair[0]], ordered[pair[1]]
    u = smaller.center - larger.center
    u /= np.linalg.norm(u)
    others = [ball for i, ball in enumerate(ordered) if i not in pair]
    if len(others) == 0:
        raise ContainedBallError(
            "The bisector of two touching balls is a ray, not a conic section."
        )

    # 2 mu (u @ (p_j - p_l) + r_j - r_l) = |p_j - p_l|^2 - (r_j - r_l)^2
    diffs = np.array([larger.center - ball.center for ball in others])
    gaps = np.array([larger.radius - ball.radius for ball in others])
    coefs = diffs @ u + gaps
    rhs = 0.5 * (np.sum(diffs ** 2.0, axis=1) - gaps ** 2.0)
    scale = get_scale(*(ball.center for ball in balls), gaps)
    if np.linalg.norm(coefs) <= tol[Tolerances.ZERO] * scale:
        raise ContainedBallError(
            "Every ball touches the same contact point; the bisectors meet "
            "along a ray."
        )
    mu = float(coefs @ rhs / (coefs @ coefs))
    if mu < -tol[Tolerances.ZERO] * scale:
        raise EmptyIntersectionError(
            "The bisectors meet behind the contact point of touching balls."
        )
    mu = max(mu, 0.0)
    candidate = _candidate(larger.center - mu * u, balls, tol)
    logger.debug(
        "Touching balls %d and %d: mu = %.3e, spread = %.3e.",
        order[pair[0]],
        order[pair[1]],
        mu,
        candidate.residual,
    )
    if not candidate.valid:
        raise EmptyIntersectionError(
            "The ray of two touching balls misses the other bisectors."
        )
    dim = larger.dim
    return CascadeResult(
        ResultKind.POINT_PAIR,
        None,
        np.eye(dim),
        sheet_vertex=candidate.point,
        tangent_z=candidate.tangent_z,
        candidates=(candidate,),
        balls=tuple(balls),
        order=tuple(order),
    )


def _vertex_points(state):
    if state.is_point:
        return [state.c_k]
    conic = state.conic
    if conic.kind is ConicKind.PARABOLOID:
        return [conic.center]
    return list(conic.vertices)


def intersect_bisectors(balls, tol=None, debug=False):
    """
    Intersect the pairwise bisectors of a set of balls.

    The balls are sorted by nonincreasing radii. If the radii are all equal,
    the bisectors are hyperplanes and the intersection is a flat. Otherwise,
    the intersection is the bisector sheet of the largest and the smallest
    balls intersected with one hyperplane per remaining ball, computed step
    by step.

    If a ball contains another one and touches it, their bisector
    degenerates to a ray from the contact point, and the intersection is the
    point of that ray on the other bisectors.

    Parameters
    ----------
    balls : list of Ball
        Balls, whose centers must be affinely independent.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.
    debug : bool, optional
        Whether to check each step against `slice_conic` and the frame
        against `verify_state`.

    Returns
    -------
    CascadeResult
        Intersection of the bisectors. It is a conic section of dimension
        ``n - s + 1`` (a point result when ``s = n + 1``), or a flat of the
        same dimension if the radii are equal.

    Raises
    ------
    TooManyBallsError
        If more than ``n + 1`` balls are given.
    AffineDependenceError
        If the centers are affinely dependent.
    ContainedBallError
        If a ball contains another one without touching it, or if the
        bisectors of touching balls meet along a ray.
    EmptyIntersectionError
        If the intersection is empty.

    Examples
    --------
    >>> from conicslice.bisectors import Ball
    >>> from conicslice.cascade import intersect_bisectors
    >>> result = intersect_bisectors([
    ...     Ball([0.0, 0.0], 1.0), Ball([3.0, 0.0], 2.0), Ball([0.0, 4.0], 3.0)
    ... ])
    >>> result.kind.value, round(result.tangent_z, 9)
    ('PointPair', 6.0)
    """
    tol = resolve_tolerances(tol)
    balls = [as_ball(ball) for ball in balls]
    if len(balls) < 2:
        raise InvalidInputError("At least two balls are required.")
    check_dimensions(*(ball.center for ball in balls))
    dim = balls[0].dim
    if len(balls) > dim + 1:
        raise TooManyBallsError(
            f"At most {dim + 1} balls can be given in dimension {dim}."
        )
    check_affine_independence([ball.center for ball in balls], tol)
    order = order_balls(balls)
    ordered = [balls[i] for i in order]
    first, last = ordered[0], ordered[-1]
    if abs(first.radius - last.radius) <= tol[Tolerances.RADIUS] * max(1.0, first.radius):
        return _flat_result(balls, ordered, order, tol)

    pairs = _touching_pairs(ordered, tol)
    if len(pairs) > 0:
        return _touching_result(balls, ordered, order, pairs[0], tol)

    base = bisector(first, last, tol)
    state = _initial_state(base)
    states = [state]
    for ball in ordered[1:-1]:
        b_1k = bisector(first, ball, tol)
        plane = triple_hyperplane(first, ball, last, tol, debug).plane
        new = _step(state, b_1k, plane, tol)
        if debug and not any(s.delegated for s in states + [new]):
            _check_step(state, new, plane, tol)
            diagnostics = verify_state(new)
            assert diagnostics.success, diagnostics.message
        state = new
        states.append(state)
        _log_state(state)
        if state.is_point:
            break

    hull_basis = state.hp_list
    candidates = tuple(_candidate(x, balls, tol) for x in _vertex_points(state))
    valid = [cand for cand in candidates if cand.valid]
    if len(ordered) == dim + 1 or state.is_point:
        if len(valid) == 0:
            raise EmptyIntersectionError(
                "No vertex of the running intersection lies on every bisector."
            )
        kind = ResultKind.POINT_PAIR
    else:
        kind = ResultKind.CONIC
    sheet = valid[0] if len(valid) > 0 else None
    if sheet is None:
        logger.debug("No vertex of the intersection passes the tangency test.")
    return CascadeResult(
        kind,
        state.conic,
        hull_basis,
        sheet_vertex=None if sheet is None else sheet.point,
        tangent_z=None if sheet is None else sheet.tangent_z,
        candidates=candidates,
        states=tuple(states),
        balls=tuple(balls),
        order=tuple(order),
    )


def verify_state(state, tol=None):
    """
    Diagnose the orthogonality relations of a running state.

    Parameters
    ----------
    state : CascadeState
        State produced by `intersect_bisectors`.
    tol : float, optional
        Threshold of the diagnostics. Defaults to ``1e-9``.

    Returns
    -------
    `scipy.optimize.OptimizeResult`
        Diagnostics, with the fields:

        u_dot_v1 : float
            Absolute value of ``u_{k-1} @ v_1`` (zero if undefined).
        v_dot_v1 : float
            Value of ``v_k @ v_1``, which must be positive.
        hp_orthogonality : float
            Largest absolute off-diagonal entry of the Gram matrix of the
            hyperplane normals.
        v_dot_hp : float
            Largest absolute value of ``v_k @ hp_j``.
        success : bool
            Whether every diagnostic is within `tol`.
        message : str
            Description of the outcome.
    """
    tol = 1e-9 if tol is None else float(tol)
    u_dot_v1 = 0.0
    if state.u_prev is not None:
        u_dot_v1 = abs(float(np.dot(state.u_prev, state.v_1)))
    v_dot_v1 = float(np.dot(state.v_k, state.v_1))
    hp = state.hp_list
    if hp.shape[0] > 0:
        gram = hp @ hp.T - np.eye(hp.shape[0])
        hp_orthogonality = float(np.max(np.abs(gram)))
        v_dot_hp = float(np.max(np.abs(hp @ state.v_k)))
    else:
        hp_orthogonality = 0.0
        v_dot_hp = 0.0
    success = (
        u_dot_v1 <= tol
        and v_dot_v1 >= tol
        and hp_orthogonality <= tol
        and v_dot_hp <= tol
    )
    message = "The state is consistent." if success else "The state is inconsistent."
    return OptimizeResult(
        k=state.k,
        u_dot_v1=u_dot_v1,
        v_dot_v1=v_dot_v1,
        hp_orthogonality=hp_orthogonality,
        v_dot_hp=v_dot_hp,
        success=success,
        message=message,
    )


def sample_result(result, count, seed=None, tol=None, max_rounds=50):
    """
    Sample points on the intersection of the bisectors.

    Points of a conic result are drawn on the running conic section, within
    its affine hull, and kept only if every pair of balls has equal tangent
    radii there, since the running conic section may contain points of the
    sheets that are not part of the bisectors.

    Parameters
    ----------
    result : CascadeResult
        Nonempty intersection.
    count : int
        Number of points for a conic or a flat result. A point result
        returns its valid candidates.
    seed : int or `numpy.random.Generator`, optional
        Seed of the random generator.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.
    max_rounds : int, optional
        Maximum number of sampling rounds for a conic result.

    Returns
    -------
    `numpy.ndarray`, shape (m, n)
        Points of the intersection.

    Raises
    ------
    EmptyIntersectionError
        If the result is empty or if no sampled point lies on every bisector.
    """
    tol = resolve_tolerances(tol)
    count = int(count)
    if count < 1:
        raise ValueError("The number of points must be positive.")
    if result.kind is ResultKind.EMPTY:
        raise EmptyIntersectionError("An empty intersection has no point.")
    if result.kind is ResultKind.POINT_PAIR:
        return result.valid_points
    rng = np.random.default_rng(seed)
    if result.kind is ResultKind.FLAT:
        span = DEFAULT_CONSTANTS[Constants.PARABOLA_SPAN]
        coords = rng.uniform(-span, span, (count, result.flat_basis.shape[0]))
        return result.flat_point + coords @ result.flat_basis

    balls = list(result.balls)
    points = []
    total = 0
    for _ in range(max_rounds):
        batch = sample_points(
            result.conic,
            SheetTag.WHOLE,
            2 * count,
            rng,
            result.hull_basis,
        )
        spread = tangency_spread(batch, balls)[0]
        keep = batch[spread <= tangency_bound(batch, balls, tol)]
        points.append(keep)
        total += keep.shape[0]
        if total >= count:
            break
    if total == 0:
        raise EmptyIntersectionError(
            "No sampled point lies on every bisector."
        )
    return np.vstack(points)[:count]
