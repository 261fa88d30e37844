"""
JSON encoding of the geometric records.

Every ``*_to_dict`` function returns plain Python containers with a fixed key
order, so that `dumps` is deterministic. Floats are written with their
shortest round-trip representation, which reproduces every 64-bit value
exactly. Non-finite values are written as ``null``.
"""
import json

import numpy as np

from .bisectors import Ball, PlaneBisector
from .conics import ConicSpec
from .geometry import Hyperplane
from .utils import GeometryError, InvalidInputError


def _number(x):
    if x is None:
        return None
    x = float(x)
    return x if np.isfinite(x) else None


def _array(x):
    if x is None:
        return None
    x = np.asarray(x, dtype=float)
    if x.ndim == 0:
        return _number(x)
    return [_array(row) for row in x]


def _field(data, key, required=True):
    if not isinstance(data, dict):
        raise InvalidInputError("A JSON object is expected.")
    if key not in data or data[key] is None:
        if required:
            raise InvalidInputError(f"The field {key!r} is missing.")
        return None
    return data[key]


def _decode(builder, data, what):
    try:
        return builder(data)
    except GeometryError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"Invalid {what}: {exc}") from exc


def conic_to_dict(spec):
    """
    Encode a conic section.
    """
    return {
        "kind": spec.kind.value,
        "dim": spec.dim,
        "center": _array(spec.center),
        "axis": _array(spec.axis),
        "a": _number(spec.a),
        "c": _number(spec.c_param),
        "b": _number(spec.b),
        "eccentricity": _number(spec.eccentricity),
        "focus1": _array(spec.focus1),
        "focus2": _array(spec.focus2),
    }


def conic_from_dict(data):
    """
    Decode a conic section.

    Parameters
    ----------
    data : dict
        Object with the fields ``kind``, ``center``, ``axis`` and ``c``, and
        optionally ``a``, ``b``, ``eccentricity``, ``focus1`` and ``focus2``.

    Returns
    -------
    ConicSpec

    Raises
    ------
    InvalidInputError
        If a required field is missing or malformed.
    """
    def build(data):
        dim = _field(data, "dim", required=False)
        spec = ConicSpec(
            _field(data, "kind"),
            _field(data, "center"),
            _field(data, "axis"),
            _field(data, "c"),
            a=_field(data, "a", required=False),
            b=_field(data, "b", required=False),
            eccentricity=_field(data, "eccentricity", required=False),
            focus1=_field(data, "focus1", required=False),
            focus2=_field(data, "focus2", required=False),
        )
        if dim is not None and int(dim) != spec.dim:
            raise InvalidInputError("The field 'dim' does not match the center.")
        return spec

    return _decode(build, data, "conic")


def plane_to_dict(plane):
    """
    Encode a hyperplane.
    """
    return {"normal": _array(plane.normal), "offset": _number(plane.offset)}


def plane_from_dict(data):
    """
    Decode a hyperplane from an object with the fields ``normal`` and
    ``offset``.
    """
    return _decode(
        lambda d: Hyperplane(_field(d, "normal"), _field(d, "offset")),
        data,
        "hyperplane",
    )


def ball_to_dict(ball):
    """
    Encode a ball.
    """
    return {"center": _array(ball.center), "radius": _number(ball.radius)}


def ball_from_dict(data):
    """
    Decode a ball from an object with the fields ``center`` and ``radius``.
    """
    return _decode(
        lambda d: Ball(_field(d, "center"), _field(d, "radius")),
        data,
        "ball",
    )


def balls_from_dict(data, key="balls"):
    """
    Decode the list of balls stored under `key`.
    """
    balls = _field(data, key)
    if not isinstance(balls, list):
        raise InvalidInputError(f"The field {key!r} must be a list.")
    return [ball_from_dict(ball) for ball in balls]


def slice_to_dict(result):
    """
    Encode the intersection of a conic section with a hyperplane.
    """
    return {
        "class": result.slice_class.value,
        "conic": None if result.conic is None else conic_to_dict(result.conic),
        "center": _array(result.center),
        "axis": _array(result.axis),
        "hull_basis": _array(result.hull_basis),
        "h_hat": _number(result.h_hat),
        "tilde_c": _number(result.tilde_c),
        "radius": _number(result.radius),
        "rho": _number(result.frame.rho),
        "sigma": _number(result.frame.sigma),
    }


def bisector_to_dict(bis):
    """
    Encode the bisector of two balls.
    """
    if isinstance(bis, PlaneBisector):
        return {
            "type": "plane",
            "plane": plane_to_dict(bis.plane),
            "larger": ball_to_dict(bis.larger),
            "smaller": ball_to_dict(bis.smaller),
        }
    return {
        "type": "sheet",
        "conic": conic_to_dict(bis.conic),
        "sheet": bis.sheet.value,
        "vertex": _array(bis.vertex),
        "larger": ball_to_dict(bis.larger),
        "smaller": ball_to_dict(bis.smaller),
    }


def triple_to_dict(triple):
    """
    Encode the hyperplane of a ball triple.
    """
    return {
        "plane": plane_to_dict(triple.plane),
        "d_point": _array(triple.d_point),
        "u_t": _array(triple.u_t),
        "source_case": triple.source_case.value,
        "balls": [ball_to_dict(ball) for ball in triple.balls],
    }


def state_to_dict(state, diagnostics=None):
    """
    Encode a running state of the intersection of bisectors, with its
    diagnostics if given.
    """
    data = {
        "k": state.k,
        "kind": None if state.conic is None else state.conic.kind.value,
        "v_k": _array(state.v_k),
        "c_k": _array(state.c_k),
        "d_k": _array(state.d_k),
        "vertex": _array(state.vertex),
        "eps_k": _number(state.eps_k),
        "a_k": _number(state.a_k),
        "b_k": _number(state.b_k),
        "rho_k": _number(state.rho_k),
        "sigma_k": _number(state.sigma_k),
        "h_hat_k": _number(state.h_hat_k),
        "tilde_c_k": _number(state.tilde_c_k),
        "delegated": state.delegated,
    }
    if diagnostics is not None:
        data["diagnostics"] = {
            "u_dot_v1": _number(diagnostics.u_dot_v1),
            "v_dot_v1": _number(diagnostics.v_dot_v1),
            "hp_orthogonality": _number(diagnostics.hp_orthogonality),
            "v_dot_hp": _number(diagnostics.v_dot_hp),
            "success": bool(diagnostics.success),
        }
    return data


def cascade_to_dict(result, steps=None):
    """
    Encode the intersection of the bisectors of a set of balls.

    Parameters
    ----------
    result : CascadeResult
        Intersection to encode.
    steps : list of dict, optional
        Encoded running states, added under the key ``steps``.
    """
    data = {
        "kind": result.kind.value,
        "dim": result.dim,
        "conic": None if result.conic is None else conic_to_dict(result.conic),
        "hull_basis": _array(result.hull_basis),
        "flat_point": _array(result.flat_point),
        "flat_basis": _array(result.flat_basis),
        "sheet_vertex": _array(result.sheet_vertex),
        "tangent_z": _number(result.tangent_z),
        "candidates": [
            {
                "point": _array(cand.point),
                "tangent_z": _number(cand.tangent_z),
                "residual": _number(cand.residual),
                "valid": cand.valid,
            }
            for cand in result.candidates
        ],
    }
    if steps is not None:
        data["steps"] = steps
    return data


def circle_to_dict(circle):
    """
    Encode a tangent circle.
    """
    return {
        "center": _array(circle.center),
        "radius": _number(circle.radius),
        "pattern": list(circle.pattern.signs),
        "tangency": [t.value for t in circle.tangencies],
        "residual": _number(circle.residual),
        "degenerate": circle.degenerate,
    }


def omitted_to_dict(omitted):
    """
    Encode a sign pattern without tangent circle.
    """
    return {
        "pattern": list(omitted.pattern.signs),
        "reason": omitted.reason.value,
        "message": omitted.message,
    }


def error_to_dict(exc):
    """
    Encode an error with its stable code.
    """
    return {"error": getattr(exc, "code", "error"), "message": str(exc)}


def points_to_list(points):
    """
    Encode a batch of points.
    """
    return _array(np.atleast_2d(points))


def dumps(payload, pretty=False):
    """
    Serialize encoded records to JSON.

    Parameters
    ----------
    payload : dict or list
        Output of the ``*_to_dict`` functions.
    pretty : bool, optional
        Whether to indent the output.

    Returns
    -------
    str
    """
    return json.dumps(payload, indent=2 if pretty else None, allow_nan=False)


def loads(text):
    """
    Parse JSON text.

    Raises
    ------
    InvalidInputError
        If the text is not valid JSON.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"Malformed JSON: {exc}") from exc


def load(path):
    """
    Parse a JSON file.

    Raises
    ------
    InvalidInputError
        If the file cannot be read or is not valid JSON.
    """
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise InvalidInputError(f"Cannot read {path}: {exc}") from exc
    return loads(text)
