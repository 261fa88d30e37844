"""
Command-line interface.

Each subcommand reads JSON files, calls the library and writes one JSON
document on the standard output. Input errors exit with status 2 and
geometric infeasibility with status 3, the error being written as
``{"error": code, "message": ...}``.
"""
import functools
import logging
import sys

import click
import numpy as np

from . import codec
from .apollonius import solve_apollonius
from .bisectors import bisector, triple_hyperplane
from .cascade import (
    CascadeResult,
    intersect_bisectors,
    sample_result,
    tangency_bound,
    tangency_spread,
    verify_state,
)
from .conics import ConicSpec, sample_points, surface_residual
from .settings import PRINT_OPTIONS, SheetTag, Tolerances
from .slicer import SliceResult, sample_slice, slice_conic
from .utils import (
    DegenerateOutputError,
    GeometryError,
    InfeasibleError,
    InvalidInputError,
    get_scale,
    resolve_tolerances,
    scale_tolerances,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


def _surface_ok(spec, points, tol):
    points = np.atleast_2d(points)
    size = np.maximum(spec.scale, np.max(np.abs(points - spec.center), axis=1))
    residual = np.abs(surface_residual(spec, points))
    return residual <= tol[Tolerances.TANGENCY] * size ** 2.0


def _hull_ok(hull_basis, center, points, tol):
    points = np.atleast_2d(points)
    if hull_basis.shape[0] == 0:
        return np.ones(points.shape[0], dtype=bool)
    offsets = np.abs((points - center) @ hull_basis.T)
    scale = get_scale(center, points)
    return np.max(offsets, axis=1) <= tol[Tolerances.TANGENCY] * scale


def emit_samples(result, count, seed=None, tol=None):
    """
    Sample points on a result and keep those that pass its membership test.

    Parameters
    ----------
    result : {ConicSpec, SliceResult, CascadeResult}
        Nonempty geometric result.
    count : int
        Number of points.
    seed : int, optional
        Seed of the random generator.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    list of list of float
        Verified points. A point result gives one or two points.

    Raises
    ------
    EmptyIntersectionError
        If the result is empty.
    """
    tol = resolve_tolerances(tol)
    if isinstance(result, CascadeResult):
        points = sample_result(result, count, seed, tol)
        spread = tangency_spread(points, result.balls)[0]
        keep = spread <= tangency_bound(points, result.balls, tol)
    elif isinstance(result, SliceResult):
        points = sample_slice(result, count, seed)
        keep = _hull_ok(result.hull_basis, result.center, points, tol)
        if result.conic is not None:
            keep &= _surface_ok(result.conic, points, tol)
    elif isinstance(result, ConicSpec):
        points = sample_points(result, SheetTag.WHOLE, count, seed)
        keep = _surface_ok(result, points, tol)
    else:
        raise TypeError(f"Cannot sample a {type(result).__name__}.")
    points = np.atleast_2d(points)
    if not np.all(keep):
        logger.warning("%d sampled points failed verification.", np.sum(~keep))
    return codec.points_to_list(points[keep])


def _setup(tol, verbose):
    if verbose:
        logging.basicConfig(
            stream=sys.stderr,
            level=logging.DEBUG,
            format="%(name)s %(levelname)s: %(message)s",
            force=True,
        )
        np.set_printoptions(**PRINT_OPTIONS)
    return None if tol is None else scale_tolerances(tol)


def _echo(payload, pretty):
    click.echo(codec.dumps(payload, pretty))


def _handled(func):
    """
    Turn library errors into a JSON error document and an exit status.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        pretty = kwargs.get("pretty", False)
        try:
            return func(*args, **kwargs)
        except InfeasibleError as exc:
            _echo(codec.error_to_dict(exc), pretty)
            ctx.exit(EXIT_INFEASIBLE)
        except GeometryError as exc:
            _echo(codec.error_to_dict(exc), pretty)
            ctx.exit(EXIT_INPUT)

    return wrapper


def _common(func):
    func = click.option(
        "--verbose",
        is_flag=True,
        help="Log diagnostics on the standard error.",
    )(func)
    func = click.option(
        "--pretty",
        is_flag=True,
        help="Indent the JSON output.",
    )(func)
    func = click.option(
        "--tol",
        type=click.FloatRange(min=0.0, min_open=True),
        default=None,
        help="Factor applied to every default tolerance.",
    )(func)
    return func


@click.group()
@click.version_option(package_name="conicslice")
def main():
    """
    Slice n-dimensional conic sections and intersect ball bisectors.

    Every subcommand writes one JSON document. Floats use their shortest
    round-trip representation, not a fixed 17 significant digits.
    """


@main.command("slice")
@click.option("--conic", "conic_path", required=True, type=click.Path(dir_okay=False))
@click.option("--plane", "plane_path", required=True, type=click.Path(dir_okay=False))
@_common
@_handled
def slice_command(conic_path, plane_path, tol, pretty, verbose):
    """
    Intersect a conic section with a hyperplane.
    """
    tol = _setup(tol, verbose)
    spec = codec.conic_from_dict(codec.load(conic_path))
    plane = codec.plane_from_dict(codec.load(plane_path))
    try:
        result = slice_conic(spec, plane, tol)
    except DegenerateOutputError as exc:
        result = exc.result
    _echo(codec.slice_to_dict(result), pretty)


@main.command("bisector")
@click.option("--balls", "balls_path", required=True, type=click.Path(dir_okay=False))
@click.option("--pair", nargs=2, type=int, default=None, help="Positions of two balls.")
@_common
@_handled
def bisector_command(balls_path, pair, tol, pretty, verbose):
    """
    Bisector of two balls, or hyperplane of a ball triple without --pair.
    """
    tol = _setup(tol, verbose)
    balls = codec.balls_from_dict(codec.load(balls_path))
    if pair:
        j, k = pair
        if not (0 <= j < len(balls) and 0 <= k < len(balls)):
            raise InvalidInputError("The pair refers to a missing ball.")
        _echo(codec.bisector_to_dict(bisector(balls[j], balls[k], tol)), pretty)
    elif len(balls) == 3:
        _echo(codec.triple_to_dict(triple_hyperplane(*balls, tol)), pretty)
    else:
        raise InvalidInputError("Give --pair or exactly three balls.")


@main.command("intersect")
@click.option("--balls", "balls_path", required=True, type=click.Path(dir_okay=False))
@click.option("--debug", is_flag=True, help="Run the internal consistency checks.")
@_common
@_handled
def intersect_command(balls_path, debug, tol, pretty, verbose):
    """
    Intersect the pairwise bisectors of a set of balls.
    """
    tol = _setup(tol, verbose)
    balls = codec.balls_from_dict(codec.load(balls_path))
    result = intersect_bisectors(balls, tol, debug)
    steps = None
    if verbose:
        steps = [codec.state_to_dict(s, verify_state(s)) for s in result.states]
    _echo(codec.cascade_to_dict(result, steps), pretty)


@main.command("apollonius")
@click.option("--circles", "circles_path", required=True, type=click.Path(dir_okay=False))
@click.option("--shift", type=float, default=None, help="Common shift of the radii.")
@_common
@_handled
def apollonius_command(circles_path, shift, tol, pretty, verbose):
    """
    Circles tangent to n + 1 circles, for every sign pattern.
    """
    tol = _setup(tol, verbose)
    circles = codec.balls_from_dict(codec.load(circles_path), "circles")
    solutions, omitted = solve_apollonius(circles, tol, shift, return_omitted=True)
    _echo({
        "circles": [codec.circle_to_dict(c) for c in solutions],
        "omitted": [codec.omitted_to_dict(o) for o in omitted],
    }, pretty)


@main.command("sample")
@click.option("--conic", "conic_path", type=click.Path(dir_okay=False), default=None)
@click.option("--plane", "plane_path", type=click.Path(dir_okay=False), default=None)
@click.option("--balls", "balls_path", type=click.Path(dir_okay=False), default=None)
@click.option("--count", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_common
@_handled
def sample_command(conic_path, plane_path, balls_path, count, seed, tol, pretty, verbose):
    """
    Sample points on a conic section, a slice or an intersection of
    bisectors.
    """
    tol = _setup(tol, verbose)
    if balls_path is not None:
        if conic_path is not None or plane_path is not None:
            raise InvalidInputError("Give either --balls or --conic.")
        balls = codec.balls_from_dict(codec.load(balls_path))
        result = intersect_bisectors(balls, tol)
    elif conic_path is not None:
        result = codec.conic_from_dict(codec.load(conic_path))
        if plane_path is not None:
            plane = codec.plane_from_dict(codec.load(plane_path))
            try:
                result = slice_conic(result, plane, tol)
            except DegenerateOutputError as exc:
                result = exc.result
    else:
        raise InvalidInputError("Give either --balls or --conic.")
    _echo({"points": emit_samples(result, count, seed, tol)}, pretty)


@main.command("verify")
@click.option("--balls", "balls_path", type=click.Path(dir_okay=False), default=None)
@click.option("--circles", "circles_path", type=click.Path(dir_okay=False), default=None)
@_common
@_handled
def verify_command(balls_path, circles_path, tol, pretty, verbose):
    """
    Diagnose an intersection of bisectors or an Apollonius solution.
    """
    tol = _setup(tol, verbose)
    if (balls_path is None) == (circles_path is None):
        raise InvalidInputError("Give exactly one of --balls and --circles.")
    if balls_path is not None:
        balls = codec.balls_from_dict(codec.load(balls_path))
        result = intersect_bisectors(balls, tol)
        steps = [codec.state_to_dict(s, verify_state(s)) for s in result.states]
        _echo({"kind": result.kind.value, "steps": steps}, pretty)
    else:
        circles = codec.balls_from_dict(codec.load(circles_path), "circles")
        solutions = solve_apollonius(circles, tol)
        _echo({
            "circles": [
                {
                    "pattern": list(c.pattern.signs),
                    "radius": float(c.radius),
                    "residual": float(c.residual),
                    "degenerate": c.degenerate,
                }
                for c in solutions
            ],
        }, pretty)


def run(argv=None):
    """
    Run the command-line interface.

    Parameters
    ----------
    argv : list of str, optional
        Arguments, without the program name. Defaults to ``sys.argv[1:]``.

    Returns
    -------
    int
        Exit status: 0 on success, 2 on invalid input and 3 on geometric
        infeasibility.
    """
    try:
        status = main.main(args=argv, prog_name="conicslice", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INPUT
    return EXIT_OK if status is None else int(status)
