import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .bisectors import Ball, as_ball, check_affine_independence, tangent_radius
from .cascade import intersect_bisectors
from .settings import (
    DEFAULT_CONSTANTS,
    Constants,
    OmitReason,
    Tangency,
    Tolerances,
)
from .utils import (
    ContainedBallError,
    EmptyIntersectionError,
    InfeasibleConfigurationError,
    InvalidConstantError,
    InvalidInputError,
    check_dimensions,
    get_scale,
    resolve_tolerances,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignPattern:
    """
    Signs applied to the radii of the input circles.

    A sign ``+1`` asks for a solution that contains the input circle
    (internal tangency) and a sign ``-1`` for a solution outside of it
    (external tangency).

    Attributes
    ----------
    signs : tuple of int
        Signs, one per input circle.
    """

    signs: tuple

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise InvalidInputError("The signs of a pattern must be 1 or -1.")
        object.__setattr__(self, "signs", signs)

    def __len__(self):
        return len(self.signs)

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __neg__(self):
        return SignPattern(tuple(-s for s in self.signs))

    @property
    def tangencies(self):
        """
        Tangency required with each input circle.

        Returns
        -------
        tuple of Tangency
        """
        return tuple(
            Tangency.INTERNAL if s > 0 else Tangency.EXTERNAL
            for s in self.signs
        )


@dataclass(frozen=True, eq=False)
class TangentCircle:
    """
    Circle (or sphere) tangent to every input circle.

    Attributes
    ----------
    center : `numpy.ndarray`, shape (n,)
        Center.
    radius : float
        Radius.
    pattern : SignPattern
        Sign pattern the circle solves.
    residual : float
        Largest residual of the tangency equations, see `verify_tangency`.
    degenerate : bool
        Whether the circle is an input circle that solves `pattern` only
        with its orientation reversed. It is the second copy of a double
        solution, which arises when input circles touch, and it satisfies
        the tangency equations of the negated pattern.
    """

    center: np.ndarray
    radius: float
    pattern: SignPattern
    residual: float = 0.0
    degenerate: bool = False

    def __post_init__(self):
        center = np.array(self.center, dtype=float)
        center.flags.writeable = False
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "residual", float(self.residual))
        object.__setattr__(self, "degenerate", bool(self.degenerate))

    @property
    def tangencies(self):
        """
        Tangency with each input circle.

        Returns
        -------
        tuple of Tangency
        """
        return self.solved_pattern.tangencies

    @property
    def solved_pattern(self):
        """
        Sign pattern whose tangency equations the circle satisfies.

        Returns
        -------
        SignPattern
            The pattern itself, or its negation for a degenerate circle.
        """
        return -self.pattern if self.degenerate else self.pattern


@dataclass(frozen=True)
class OmittedPattern:
    """
    Sign pattern that yields no tangent circle.

    Attributes
    ----------
    pattern : SignPattern
        Sign pattern.
    reason : OmitReason
        Reason code.
    message : str
        Human-readable explanation.
    """

    pattern: SignPattern
    reason: OmitReason
    message: str


def verify_tangency(circle, circles):
    """
    Largest residual of the tangency equations of a circle.

    Parameters
    ----------
    circle : TangentCircle
        Candidate circle.
    circles : list of Ball
        Input circles, in the order of the signs of ``circle.pattern``.

    Returns
    -------
    float
        Maximum over the input circles of
        ``|norm(center - p_i) - (radius - sign_i * r_i)|``, i.e., of the
        residual of ``norm(center - p_i) = radius - r_i`` for an internal
        tangency and of ``norm(center - p_i) = radius + r_i`` for an external
        one.
        A degenerate circle is checked against the negated pattern.

    Examples
    --------
    >>> from conicslice.apollonius import SignPattern, TangentCircle
    >>> from conicslice.apollonius import verify_tangency
    >>> from conicslice.bisectors import Ball
    >>> circles = [Ball([0.0, 0.0], 1.0), Ball([3.0, 0.0], 2.0),
    ...            Ball([0.0, 4.0], 3.0)]
    >>> circle = TangentCircle([3.0, 4.0], 6.0, SignPattern((1, 1, 1)))
    >>> verify_tangency(circle, circles)
    0.0
    """
    circles = [as_ball(c) for c in circles]
    if len(circles) != len(circle.pattern):
        raise InvalidInputError(
            "The pattern must have one sign per input circle."
        )
    residual = 0.0
    for sign, ball in zip(circle.solved_pattern.signs, circles):
        dist = np.linalg.norm(circle.center - ball.center)
        residual = max(residual, abs(dist - (circle.radius - sign * ball.radius)))
    return float(residual)


def _same_circle(first, second, scale, tol):
    atol = tol[Tolerances.TANGENCY] * scale
    return (
        np.linalg.norm(first.center - second.center) <= atol
        and abs(first.radius - second.radius) <= atol
    )


def _solve_pattern(circles, pattern, shift, scale, tol, debug):
    """
    Tangent circles of one sign pattern.

    Returns the circles found, or an `OmittedPattern` if there is none.
    """
    modified = [
        Ball(ball.center, sign * ball.radius + shift)
        for sign, ball in zip(pattern.signs, circles)
    ]
    try:
        result = intersect_bisectors(modified, tol, debug)
    except ContainedBallError as exc:
        return OmittedPattern(pattern, OmitReason.CONTAINED, str(exc))
    except EmptyIntersectionError as exc:
        return OmittedPattern(pattern, OmitReason.EMPTY, str(exc))

    found = []
    reason = OmitReason.TANGENCY
    for point in result.valid_points:
        radius = float(tangent_radius(point, modified[0])) - shift
        if radius <= tol[Tolerances.TANGENCY] * scale:
            reason = OmitReason.NONPOSITIVE_RADIUS
            continue
        circle = TangentCircle(point, radius, pattern)
        residual = verify_tangency(circle, circles)
        if residual > tol[Tolerances.TANGENCY] * scale:
            continue
        found.append(TangentCircle(point, radius, pattern, residual))
    if len(found) == 0:
        return OmittedPattern(
            pattern,
            reason,
            "No candidate of the intersection gives a tangent circle.",
        )
    return found


def solve_apollonius(circles, tol=None, shift=None, debug=False, return_omitted=False):
    """
    Solve the problem of Apollonius.

    Every circle tangent to ``n + 1`` given circles (or spheres in dimension
    ``n``) is the center of a ball containing tangentially some balls once
    the radii of the others are negated. Adding a common shift to the radii
    makes them positive again without moving the bisectors, so that each of
    the ``2 ** (n + 1)`` sign patterns is solved by `intersect_bisectors`.

    The patterns ``s`` and ``-s`` share their solutions up to the sign of the
    radius. When input circles touch, an input circle solves one of them
    twice; its second copy is reported under the other pattern, marked
    ``degenerate``.

    Parameters
    ----------
    circles : list of Ball
        Input circles, with positive radii and affinely independent centers.
        Their number must be one more than the dimension.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.
    shift : float, optional
        Common shift added to the signed radii. It must exceed the largest
        radius. Defaults to one plus the largest radius.
    debug : bool, optional
        Whether to run the consistency checks of `intersect_bisectors`.
    return_omitted : bool, optional
        Whether to also return the sign patterns without solution.

    Returns
    -------
    list of TangentCircle
        Tangent circles, ordered by sign pattern, the pattern ``(1, ..., 1)``
        first.
    list of OmittedPattern
        Patterns without solution, with the reason. It is returned only if
        `return_omitted` is ``True``.

    Raises
    ------
    InvalidInputError
        If the number of circles does not match the dimension or if a radius
        is not positive.
    InvalidConstantError
        If `shift` does not exceed the largest radius.
    AffineDependenceError
        If the centers are affinely dependent.
    InfeasibleConfigurationError
        If no sign pattern yields a tangent circle.

    Examples
    --------
    >>> from conicslice.apollonius import solve_apollonius
    >>> from conicslice.bisectors import Ball
    >>> circles = solve_apollonius([
    ...     Ball([0.0, 0.0], 1.0), Ball([3.0, 0.0], 2.0), Ball([0.0, 4.0], 3.0)
    ... ])
    >>> [round(c.radius, 9) for c in circles if set(c.pattern.signs) == {1}]
    [6.0]
    >>> [round(c.radius, 9) for c in circles if set(c.pattern.signs) == {-1}]
    [0.260869565]
    """
    tol = resolve_tolerances(tol)
    circles = [as_ball(c) for c in circles]
    if len(circles) == 0:
        raise InvalidInputError("At least one circle is required.")
    check_dimensions(*(ball.center for ball in circles))
    dim = circles[0].dim
    if len(circles) != dim + 1:
        raise InvalidInputError(
            f"Exactly {dim + 1} circles are required in dimension {dim}."
        )
    radii = np.array([ball.radius for ball in circles])
    if np.any(radii <= 0.0):
        raise InvalidInputError("The radii of the circles must be positive.")
    if shift is None:
        shift = DEFAULT_CONSTANTS[Constants.APOLLONIUS_SHIFT] + np.max(radii)
    else:
        shift = float(shift)
        if not np.isfinite(shift) or shift <= np.max(radii):
            raise InvalidConstantError(
                "The shift must exceed the largest radius."
            )
    check_affine_independence([ball.center for ball in circles], tol)
    scale = get_scale(*(ball.center for ball in circles), radii)

    patterns = [
        SignPattern(signs)
        for signs in itertools.product((1, -1), repeat=len(circles))
    ]
    solutions = []
    omitted = []
    for pattern in patterns:
        outcome = _solve_pattern(circles, pattern, shift, scale, tol, debug)
        if isinstance(outcome, OmittedPattern):
            omitted.append(outcome)
            logger.info("Pattern %s omitted (%s).", pattern, outcome.reason.value)
            continue
        for circle in outcome:
            if any(_same_circle(circle, other, scale, tol) for other in solutions):
                omitted.append(OmittedPattern(
                    pattern,
                    OmitReason.DUPLICATE,
                    "The circle was already found for another pattern.",
                ))
                logger.info("Pattern %s omitted (duplicate).", pattern)
                continue
            solutions.append(circle)

    # An input circle that solves a pattern is a double solution; its second
    # copy belongs to the negated pattern, which has no other solution.
    for circle in list(solutions):
        if not any(_same_circle(circle, ball, scale, tol) for ball in circles):
            continue
        mirror = -circle.pattern
        if any(other.pattern == mirror for other in solutions):
            continue
        double = TangentCircle(circle.center, circle.radius, mirror, degenerate=True)
        solutions.append(TangentCircle(
            circle.center,
            circle.radius,
            mirror,
            verify_tangency(double, circles),
            degenerate=True,
        ))
        omitted = [item for item in omitted if item.pattern != mirror]
        logger.info("Pattern %s solved by a touching input circle.", mirror)
    solutions.sort(key=lambda circle: patterns.index(circle.pattern))
    if len(solutions) == 0:
        raise InfeasibleConfigurationError(
            "No sign pattern yields a tangent circle."
        )
    logger.debug("%d tangent circles found.", len(solutions))
    if return_omitted:
        return solutions, omitted
    return solutions
