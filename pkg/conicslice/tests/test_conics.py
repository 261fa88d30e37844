import numpy as np
import pytest

from ..conics import (
    ConicSpec,
    asymptotic_cone,
    cone_from_axis,
    cone_residual,
    directrix,
    directrix_residual,
    ellipsoid_from_foci,
    hyperboloid_from_foci,
    metric_residual,
    paraboloid_from_points,
    paraboloid_residual,
    parametric_points,
    quadratic_form,
    quadric_residual,
    sample_points,
    surface_residual,
)
from ..settings import ConicKind, SheetTag
from ..utils import (
    CoincidentFociError,
    DegenerateOutputError,
    DegenerateRaysError,
    DegenerateSegmentError,
    InvalidConstantError,
    InvalidEccentricityError,
    KindMismatchError,
)


def random_conic(kind, n, rng):
    """
    Random conic section of a given kind.
    """
    center = rng.uniform(-3.0, 3.0, n)
    axis = rng.standard_normal(n)
    axis /= np.linalg.norm(axis)
    c_param = rng.uniform(0.5, 2.0)
    if kind is ConicKind.HYPERBOLOID:
        return hyperboloid_from_foci(
            center + c_param * axis,
            center - c_param * axis,
            2.0 * c_param * rng.uniform(0.2, 0.9),
        )
    if kind is ConicKind.ELLIPSOID:
        return ellipsoid_from_foci(
            center + c_param * axis,
            center - c_param * axis,
            2.0 * c_param / rng.uniform(0.2, 0.9),
        )
    if kind is ConicKind.PARABOLOID:
        return paraboloid_from_points(center + c_param * axis, center - c_param * axis)
    return cone_from_axis(center, axis, rng.uniform(1.2, 4.0))


def sizes(spec, x):
    return np.maximum(spec.scale, np.max(np.abs(x - spec.center), axis=1))


class TestConstructors:

    def test_hyperboloid(self):
        spec = hyperboloid_from_foci([1.0, 0.0], [-1.0, 0.0], 1.0)
        assert spec.kind is ConicKind.HYPERBOLOID
        np.testing.assert_array_equal(spec.center, [0.0, 0.0])
        np.testing.assert_array_equal(spec.axis, [1.0, 0.0])
        assert spec.c_param == 1.0
        assert spec.a == 0.5
        assert spec.eccentricity == 2.0
        assert spec.b == pytest.approx(np.sqrt(0.75))
        assert spec.k_param == pytest.approx(0.75)
        assert spec.directrix_offset == pytest.approx(0.25)
        np.testing.assert_allclose(spec.directrix_points[0], [0.25, 0.0])
        np.testing.assert_allclose(spec.vertices[1], [-0.5, 0.0])
        assert not spec.center.flags.writeable
        assert not spec.focus1.flags.writeable

    def test_hyperboloid_exceptions(self):
        with pytest.raises(CoincidentFociError):
            hyperboloid_from_foci([1.0, 0.0], [1.0, 0.0], 1.0)
        with pytest.raises(DegenerateRaysError):
            hyperboloid_from_foci([1.0, 0.0], [-1.0, 0.0], 2.0)
        with pytest.raises(InvalidConstantError):
            hyperboloid_from_foci([1.0, 0.0], [-1.0, 0.0], 3.0)
        with pytest.raises(InvalidConstantError):
            hyperboloid_from_foci([1.0, 0.0], [-1.0, 0.0], 0.0)

    def test_ellipsoid(self):
        spec = ellipsoid_from_foci([0.0, 0.0, 1.0], [0.0, 0.0, -1.0], 4.0)
        assert spec.a == 2.0
        assert spec.eccentricity == 0.5
        assert spec.b == pytest.approx(np.sqrt(3.0))
        assert spec.k_param == pytest.approx(-3.0)
        np.testing.assert_allclose(spec.directrix_points[0], [0.0, 0.0, 4.0])

    def test_sphere(self):
        spec = ellipsoid_from_foci([1.0, 1.0], [1.0, 1.0], 2.0)
        assert spec.c_param == 0.0
        assert spec.eccentricity == 0.0
        np.testing.assert_array_equal(spec.axis, [1.0, 0.0])
        assert spec.directrix_offset == np.inf
        with pytest.raises(DegenerateOutputError):
            spec.directrix_points
        x = sample_points(spec, SheetTag.WHOLE, 50, 0)
        np.testing.assert_allclose(np.linalg.norm(x - spec.center, axis=1), 1.0)

    def test_ellipsoid_exceptions(self):
        with pytest.raises(DegenerateSegmentError):
            ellipsoid_from_foci([1.0, 0.0], [-1.0, 0.0], 2.0)
        with pytest.raises(InvalidConstantError):
            ellipsoid_from_foci([1.0, 0.0], [-1.0, 0.0], 1.0)

    def test_paraboloid(self):
        spec = paraboloid_from_points([0.0, 1.0], [0.0, -1.0])
        assert spec.kind is ConicKind.PARABOLOID
        assert spec.a is None and spec.eccentricity is None
        assert spec.k_param is None
        assert paraboloid_residual(spec, [2.0, 1.0]) == pytest.approx(0.0)
        assert directrix_residual(spec, [2.0, 1.0]) == pytest.approx(0.0)
        with pytest.raises(CoincidentFociError):
            paraboloid_from_points([0.0, 1.0], [0.0, 1.0])
        with pytest.raises(KindMismatchError):
            quadric_residual(spec, [0.0, 0.0])

    def test_cone(self):
        spec = cone_from_axis([0.0, 0.0], [0.0, 2.0], 2.0)
        assert spec.c_param == 1.0
        assert spec.a == 0.5
        assert spec.focus2 is None
        assert spec.k_param == 0.0
        residual, tag = cone_residual(spec, [np.sqrt(3.0), 1.0])
        assert residual == pytest.approx(0.0, abs=1e-15)
        assert tag is SheetTag.SHEET1
        assert cone_residual(spec, [np.sqrt(3.0), -1.0])[1] is SheetTag.SHEET2
        with pytest.raises(InvalidEccentricityError):
            cone_from_axis([0.0, 0.0], [0.0, 1.0], 1.0)
        with pytest.raises(KindMismatchError):
            metric_residual(spec, [1.0, 1.0])
        with pytest.raises(KindMismatchError):
            directrix(spec)

    def test_from_parameters(self):
        spec = ConicSpec.from_parameters(
            ConicKind.HYPERBOLOID, [0.0, 0.0, 0.0], [0.0, 0.0, 2.0], 2.0, 1.0
        )
        np.testing.assert_array_equal(spec.axis, [0.0, 0.0, 1.0])
        np.testing.assert_array_equal(spec.focus1, [0.0, 0.0, 2.0])
        np.testing.assert_array_equal(spec.focus2, [0.0, 0.0, -2.0])
        assert spec.eccentricity == 2.0

    def test_validation(self):
        with pytest.raises(InvalidConstantError):
            ConicSpec(ConicKind.HYPERBOLOID, [0.0, 0.0], [1.0, 0.0], 1.0, a=1.5)
        with pytest.raises(InvalidConstantError):
            ConicSpec(ConicKind.ELLIPSOID, [0.0, 0.0], [1.0, 0.0], 1.0, a=0.5)
        with pytest.raises(InvalidConstantError):
            ConicSpec(ConicKind.PARABOLOID, [0.0, 0.0], [1.0, 0.0], 0.0)


class TestResiduals:

    def test_quadratic_form(self):
        spec = hyperboloid_from_foci([0.0, 0.0, 2.0], [0.0, 0.0, -2.0], 2.0)
        assert quadratic_form(spec, spec.axis) == pytest.approx(3.0)
        assert quadratic_form(spec, [1.0, 0.0, 0.0]) == pytest.approx(-1.0)

    def test_directrix(self):
        spec = hyperboloid_from_foci([2.0, 0.0], [-2.0, 0.0], 2.0)
        plane = directrix(spec, SheetTag.SHEET2)
        np.testing.assert_array_equal(plane.normal, [1.0, 0.0])
        assert plane.offset == pytest.approx(-0.5)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    @pytest.mark.parametrize("kind", list(ConicKind))
    def test_random(self, kind, n):
        rng = np.random.default_rng(n)
        for _ in range(100):
            spec = random_conic(kind, n, rng)
            sheet = SheetTag.SHEET1 if kind in (ConicKind.HYPERBOLOID, ConicKind.CONE) else SheetTag.WHOLE
            x = sample_points(spec, sheet, 1000, rng)
            size = sizes(spec, x)
            residual = surface_residual(spec, x)
            assert np.all(np.abs(residual) <= 1e-8 * size ** 2.0)
            if kind is ConicKind.CONE:
                residual, tags = cone_residual(spec, x)
                assert np.all(np.abs(residual) <= 1e-8 * size)
                continue
            residual, tags = metric_residual(spec, x)
            assert np.all(np.abs(residual) <= 1e-8 * size)
            residual = directrix_residual(spec, x, sheet if kind is ConicKind.HYPERBOLOID else SheetTag.WHOLE)
            assert np.all(np.abs(residual) <= 1e-8 * size)
            if kind is ConicKind.HYPERBOLOID:
                assert all(tag is SheetTag.SHEET1 for tag in tags)

    def test_second_sheet(self):
        rng = np.random.default_rng(3)
        spec = random_conic(ConicKind.HYPERBOLOID, 4, rng)
        x = sample_points(spec, SheetTag.SHEET2, 50, rng)
        residual, tags = metric_residual(spec, x)
        assert np.all(np.abs(residual) <= 1e-8 * sizes(spec, x))
        assert all(tag is SheetTag.SHEET2 for tag in tags)
        residual = directrix_residual(spec, x, SheetTag.SHEET2)
        assert np.all(np.abs(residual) <= 1e-8 * sizes(spec, x))
        with pytest.raises(KindMismatchError):
            directrix_residual(spec, x, SheetTag.WHOLE)

    def test_whole(self):
        rng = np.random.default_rng(4)
        spec = random_conic(ConicKind.HYPERBOLOID, 3, rng)
        x = sample_points(spec, SheetTag.WHOLE, 200, rng)
        _, tags = metric_residual(spec, x)
        assert {SheetTag.SHEET1, SheetTag.SHEET2} == set(tags)
        with pytest.raises(KindMismatchError):
            sample_points(random_conic(ConicKind.ELLIPSOID, 3, rng), SheetTag.SHEET1, 1)


class TestSampling:

    def test_deterministic(self):
        spec = hyperboloid_from_foci([0.0, 0.0, 2.0], [0.0, 0.0, -2.0], 2.0)
        np.testing.assert_array_equal(
            sample_points(spec, SheetTag.WHOLE, 20, 7),
            sample_points(spec, SheetTag.WHOLE, 20, 7),
        )

    def test_hull(self):
        spec = ellipsoid_from_foci([1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], 4.0)
        hull = np.array([[0.0, 0.0, 1.0]])
        x = sample_points(spec, SheetTag.WHOLE, 50, 0, hull)
        np.testing.assert_allclose(x[:, 2], 0.0, atol=1e-15)
        np.testing.assert_allclose(surface_residual(spec, x), 0.0, atol=1e-12)

    def test_flat_hull(self):
        spec = ellipsoid_from_foci([1.0, 0.0], [-1.0, 0.0], 4.0)
        x = sample_points(spec, SheetTag.WHOLE, 20, 0, [[0.0, 1.0]])
        np.testing.assert_allclose(np.abs(x[:, 0]), 2.0)
        np.testing.assert_allclose(x[:, 1], 0.0)

    def test_vertex(self):
        spec = hyperboloid_from_foci([0.0, 3.0], [0.0, -1.0], 2.0)
        x = parametric_points(spec, [1.0, 0.0], 0.0)
        np.testing.assert_allclose(x, spec.vertices[0])

    def test_exceptions(self):
        spec = cone_from_axis([0.0, 0.0], [1.0, 0.0], 2.0)
        with pytest.raises(ValueError):
            sample_points(spec, SheetTag.WHOLE, 0)


class TestAsymptoticCone:

    def test_simple(self):
        spec = hyperboloid_from_foci([0.0, 0.0, 2.0], [0.0, 0.0, -2.0], 2.0)
        cone = asymptotic_cone(spec)
        assert cone.kind is ConicKind.CONE
        assert cone.eccentricity == spec.eccentricity
        np.testing.assert_allclose(cone.axis, spec.axis, atol=1e-15)
        with pytest.raises(KindMismatchError):
            asymptotic_cone(cone)

    def test_convergence(self):
        rng = np.random.default_rng(10)
        for _ in range(50):
            spec = random_conic(ConicKind.HYPERBOLOID, 3, rng)
            cone = asymptotic_cone(spec)
            u = np.cross(spec.axis, rng.standard_normal(3))
            u /= np.linalg.norm(u)
            distances = []
            for alpha in (1.0, 1.3, 1.5, 1.565):
                t = spec.b * np.tan(alpha) / cone.b
                x = parametric_points(spec, u, alpha)
                y = parametric_points(cone, u, t)
                distances.append(np.linalg.norm(x - y))
            assert distances[0] > distances[1] > distances[2] > distances[3]
            assert distances[3] <= 1e-2 * spec.scale
