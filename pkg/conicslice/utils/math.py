import warnings

import numpy as np

from .exceptions import DimensionError
from ..settings import DEFAULT_TOLERANCES, Tolerances


def get_scale(*arrays):
    """
    Get the length scale of a set of arrays.

    Parameters
    ----------
    *arrays: tuple
        Set of `numpy.ndarray` or floats to get the scale for.

    Returns
    -------
    float
        Maximum of one and of the largest finite absolute entry.
    """
    weight = 1.0
    for array in arrays:
        if array is None:
            continue
        array = np.asarray(array, dtype=float)
        finite = array[np.isfinite(array)]
        weight = max(weight, np.max(np.abs(finite), initial=1.0))
    return float(weight)


def get_arrays_tol(*arrays, rtol=1e-12):
    """
    Get a relative tolerance for a set of arrays.

    Parameters
    ----------
    *arrays: tuple
        Set of `numpy.ndarray` to get the tolerance for.
    rtol : float, optional
        Relative tolerance.

    Returns
    -------
    float
        Relative tolerance for the set of arrays.

    Raises
    ------
    ValueError
        If no array is provided.
    """
    if len(arrays) == 0:
        raise ValueError("At least one array must be provided.")
    return rtol * get_scale(*arrays)


def exact_1d_array(x, message):
    """
    Preprocess a vector.

    Parameters
    ----------
    x : array_like
        Array to be preprocessed.
    message : str
        Error message if `x` cannot be interpreted as a vector.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Preprocessed array.

    Raises
    ------
    DimensionError
        If `x` is not a finite vector of dimension at least two.
    """
    x = np.array(x, dtype=float)
    if x.ndim != 1 or x.size < 2 or not np.all(np.isfinite(x)):
        raise DimensionError(message)
    return x


def exact_2d_array(x, message):
    """
    Preprocess a batch of points.

    Parameters
    ----------
    x : array_like
        Array to be preprocessed.
    message : str
        Error message if `x` cannot be interpreted as a batch of vectors.

    Returns
    -------
    `numpy.ndarray`, shape (m, n)
        Preprocessed array.
    """
    x = np.atleast_2d(np.array(x, dtype=float))
    if x.ndim != 2 or not np.all(np.isfinite(x)):
        raise DimensionError(message)
    return x


def check_dimensions(*vectors):
    """
    Check that vectors share their last dimension.

    Raises
    ------
    DimensionError
        If the dimensions differ.
    """
    dims = {np.shape(vector)[-1] for vector in vectors if vector is not None}
    if len(dims) > 1:
        raise DimensionError(f"Dimension mismatch: {sorted(dims)}.")


def resolve_tolerances(tol=None):
    """
    Fill a tolerance dictionary with the default values.

    Parameters
    ----------
    tol : dict, optional
        Tolerances to override, keyed by the values of
        `conicslice.settings.Tolerances`.

    Returns
    -------
    dict
        Complete tolerance dictionary.

    Raises
    ------
    ValueError
        If a tolerance is not a positive number.

    Warns
    -----
    RuntimeWarning
        If a key is not a known tolerance.
    """
    if tol is None:
        return dict(DEFAULT_TOLERANCES)
    resolved = dict(DEFAULT_TOLERANCES)
    for key, value in tol.items():
        key = key.value if isinstance(key, Tolerances) else key
        if key not in resolved:
            warnings.warn(f"Unknown tolerance: {key}.", RuntimeWarning, 3)
            continue
        value = float(value)
        if not np.isfinite(value) or value <= 0.0:
            raise ValueError(f"The tolerance {key} must be positive.")
        resolved[key] = value
    return resolved


def scale_tolerances(factor):
    """
    Scale every default tolerance by the same factor.

    Parameters
    ----------
    factor : float
        Positive scaling factor.

    Returns
    -------
    dict
        Scaled tolerance dictionary.
    """
    factor = float(factor)
    if not np.isfinite(factor) or factor <= 0.0:
        raise ValueError("The tolerance factor must be positive.")
    return {key: factor * value for key, value in DEFAULT_TOLERANCES.items()}
