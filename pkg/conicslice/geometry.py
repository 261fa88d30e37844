from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from .settings import Tolerances
from .utils import (
    DependentVectorError,
    ZeroVectorError,
    check_dimensions,
    exact_1d_array,
    get_arrays_tol,
    resolve_tolerances,
)


def as_vector(x, name="x"):
    """
    Convert an input into a read-only vector.

    Parameters
    ----------
    x : array_like
        Coordinates.
    name : str, optional
        Name of the input, used in error messages.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Read-only copy of the coordinates.

    Raises
    ------
    DimensionError
        If `x` is not a finite vector of dimension at least two.
    """
    x = exact_1d_array(x, f"The argument {name} must be a finite vector.")
    x.flags.writeable = False
    return x


def normalize(x, tol=None):
    """
    Normalize a vector.

    Parameters
    ----------
    x : array_like, shape (n,)
        Vector to normalize.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Unit vector ``x / norm(x)``.

    Raises
    ------
    ZeroVectorError
        If the norm of `x` is below the relative zero tolerance.

    Examples
    --------
    >>> from conicslice.geometry import normalize
    >>> normalize([3.0, 4.0])
    array([0.6, 0.8])
    """
    tol = resolve_tolerances(tol)
    x = exact_1d_array(x, "The vector must be a finite vector.")
    norm = np.linalg.norm(x)
    if norm <= get_arrays_tol(x, rtol=tol[Tolerances.ZERO]):
        raise ZeroVectorError("The vector is numerically zero.")
    return x / norm


def project_out(x, u):
    """
    Remove from a vector its component along a unit vector.

    Parameters
    ----------
    x : array_like, shape (n,)
        Vector to project.
    u : array_like, shape (n,)
        Unit vector.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Vector ``x - (x @ u) * u``.
    """
    x = exact_1d_array(x, "The vector must be a finite vector.")
    u = exact_1d_array(u, "The direction must be a finite vector.")
    check_dimensions(x, u)
    return x - np.dot(x, u) * u


def orthonormalize_against(x, basis, tol=None):
    """
    Orthonormalize a vector against a set of orthonormal vectors.

    Classical Gram-Schmidt with one reorthogonalization pass.

    Parameters
    ----------
    x : array_like, shape (n,)
        Vector to orthonormalize.
    basis : array_like, shape (m, n)
        Mutually orthonormal vectors, stored row-wise. It may be empty.
    tol : dict, optional
        Tolerances, see `conicslice.settings.Tolerances`.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Unit vector orthogonal to every row of `basis`, in the span of the
        rows of `basis` and `x`.

    Raises
    ------
    DependentVectorError
        If `x` lies numerically in the span of `basis`.
    """
    tol = resolve_tolerances(tol)
    x = exact_1d_array(x, "The vector must be a finite vector.")
    basis = np.reshape(np.asarray(basis, dtype=float), (-1, x.size))
    residual = np.copy(x)
    for _ in range(2):
        residual -= basis.T @ (basis @ residual)
    norm = np.linalg.norm(residual)
    if norm <= get_arrays_tol(x, rtol=tol[Tolerances.ZERO]):
        raise DependentVectorError("The vector lies in the span of the basis.")
    return residual / norm


def complement_basis(vectors, dim):
    """
    Orthonormal basis of the orthogonal complement of a set of vectors.

    Parameters
    ----------
    vectors : array_like, shape (m, n)
        Vectors stored row-wise. It may be empty.
    dim : int
        Ambient dimension n.

    Returns
    -------
    `numpy.ndarray`, shape (k, n)
        Orthonormal basis stored row-wise, with ``k = n - rank(vectors)``.
    """
    vectors = np.reshape(np.asarray(vectors, dtype=float), (-1, dim))
    if vectors.shape[0] == 0:
        return np.eye(dim)
    return null_space(vectors).T


def orthogonal_direction(vectors, dim):
    """
    Deterministic unit vector orthogonal to a set of vectors.

    The coordinate vector with the smallest projection onto the span of
    `vectors` is orthonormalized against that span.

    Parameters
    ----------
    vectors : array_like, shape (m, n)
        Vectors stored row-wise, with ``m < n``.
    dim : int
        Ambient dimension n.

    Returns
    -------
    `numpy.ndarray`, shape (n,)
        Unit vector orthogonal to every row of `vectors`.
    """
    vectors = np.reshape(np.asarray(vectors, dtype=float), (-1, dim))
    span = np.linalg.qr(vectors.T)[0].T if vectors.shape[0] > 0 else vectors
    leverage = np.sum(span ** 2.0, axis=0)
    e = np.zeros(dim)
    e[np.argmin(leverage)] = 1.0
    return orthonormalize_against(e, span)


@dataclass(frozen=True, eq=False)
class Hyperplane:
    """
    Hyperplane ``{x : normal @ x = offset}``.

    The normal is normalized at construction and the offset is scaled
    accordingly, so that any nonzero normal may be given.

    Attributes
    ----------
    normal : `numpy.ndarray`, shape (n,)
        Unit normal vector.
    offset : float
        Signed distance of the hyperplane from the origin along `normal`.
    """

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        normal = exact_1d_array(self.normal, "The normal must be a vector.")
        norm = np.linalg.norm(normal)
        if norm <= get_arrays_tol(normal):
            raise ZeroVectorError("The normal of a hyperplane must be nonzero.")
        offset = float(self.offset)
        if not np.isfinite(offset):
            raise ValueError("The offset of a hyperplane must be finite.")
        if norm != 1.0:
            normal = normal / norm
            offset = offset / norm
        normal.flags.writeable = False
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", offset)

    @classmethod
    def through(cls, point, normal):
        """
        Hyperplane with a given normal through a given point.
        """
        normal = normalize(normal)
        return cls(normal, float(np.dot(normal, point)))

    @property
    def dim(self):
        """
        Ambient dimension.

        Returns
        -------
        int
        """
        return self.normal.size

    def h_hat(self, center):
        """
        Signed offset of the hyperplane from a point.

        Parameters
        ----------
        center : array_like, shape (n,)
            Reference point, usually the center of a conic section.

        Returns
        -------
        float
            ``offset - normal @ center``.
        """
        return float(self.offset - np.dot(self.normal, center))

    def residual(self, x):
        """
        Evaluate ``normal @ x - offset`` at one or several points.
        """
        return np.asarray(x, dtype=float) @ self.normal - self.offset

    def project(self, x):
        """
        Orthogonal projection of a point onto the hyperplane.
        """
        x = np.asarray(x, dtype=float)
        return x - self.residual(x) * self.normal
