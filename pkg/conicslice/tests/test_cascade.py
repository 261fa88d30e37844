import numpy as np
import pytest

from .test_bisectors import random_balls
from ..bisectors import Ball, bisector
from ..cascade import (
    CascadeResult,
    intersect_bisectors,
    sample_result,
    tangency_bound,
    tangency_spread,
    verify_state,
)
from ..settings import DEFAULT_TOLERANCES, ResultKind
from ..utils import (
    AffineDependenceError,
    ContainedBallError,
    EmptyIntersectionError,
    InvalidInputError,
    TooManyBallsError,
)


def descartes():
    return [Ball([0.0, 0.0], 1.0), Ball([3.0, 0.0], 2.0), Ball([0.0, 4.0], 3.0)]


class TestPointPair:

    @pytest.mark.parametrize("debug", [False, True])
    def test_descartes(self, debug):
        result = intersect_bisectors(descartes(), debug=debug)
        assert result.kind is ResultKind.POINT_PAIR
        assert result.dim == 0
        np.testing.assert_allclose(result.sheet_vertex, [3.0, 4.0], atol=1e-9)
        assert result.tangent_z == pytest.approx(6.0, abs=1e-9)
        assert result.order == (2, 1, 0)
        assert len(result.states) == 2
        assert any(np.allclose(x, [3.0, 4.0], atol=1e-9) for x in result.valid_points)
        for state in result.states:
            assert verify_state(state).success
        np.testing.assert_array_equal(sample_result(result, 10), result.valid_points)

    def test_tangency_spread(self):
        spread, z = tangency_spread([3.0, 4.0], descartes())
        assert spread == pytest.approx(0.0, abs=1e-12)
        np.testing.assert_allclose(z, [6.0, 6.0, 6.0])
        spread, z = tangency_spread([[3.0, 4.0], [0.0, 0.0]], descartes())
        assert z.shape == (2, 3)
        np.testing.assert_allclose(spread, [0.0, 3.0], atol=1e-12)
        bound = tangency_bound([3.0, 4.0], descartes(), DEFAULT_TOLERANCES)
        assert bound == pytest.approx(4.0 * DEFAULT_TOLERANCES["tangency"])

    def test_empty(self):
        balls = [Ball([-3.0, 0.0], 2.0), Ball([3.0, 0.0], 2.0), Ball([0.0, 0.1], 0.5)]
        with pytest.raises(EmptyIntersectionError):
            intersect_bisectors(balls)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3])
    def test_random(self, n):
        rng = np.random.default_rng(30 + n)
        found = 0
        for _ in range(200):
            balls = random_balls(n + 1, n, rng)
            try:
                result = intersect_bisectors(balls, debug=True)
            except EmptyIntersectionError:
                continue
            assert result.kind is ResultKind.POINT_PAIR
            for x in result.valid_points:
                found += 1
                spread = tangency_spread(x, balls)[0]
                assert spread <= 1e-7 * max(5.0, np.max(np.abs(x)))
        assert found > 0

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_permutation(self, n):
        rng = np.random.default_rng(50 + n)
        compared = 0
        for _ in range(30):
            balls = random_balls(n + 1, n, rng)
            shuffled = [balls[i] for i in rng.permutation(n + 1)]
            try:
                result = intersect_bisectors(balls)
            except EmptyIntersectionError:
                with pytest.raises(EmptyIntersectionError):
                    intersect_bisectors(shuffled)
                continue
            other = intersect_bisectors(shuffled)
            np.testing.assert_array_equal(
                [balls[i].radius for i in result.order],
                [shuffled[i].radius for i in other.order],
            )
            assert (result.sheet_vertex is None) == (other.sheet_vertex is None)
            if result.sheet_vertex is None:
                continue
            compared += 1
            scale = max(5.0, np.max(np.abs(result.sheet_vertex)))
            np.testing.assert_allclose(
                other.sheet_vertex, result.sheet_vertex, atol=1e-12 * scale
            )
            assert abs(other.tangent_z - result.tangent_z) <= 1e-12 * scale
        assert compared > 0

    @pytest.mark.parametrize("shift", [0.5, 3.0, 40.0])
    def test_shift(self, shift):
        rng = np.random.default_rng(60)
        compared = 0
        for _ in range(30):
            balls = random_balls(4, 3, rng)
            try:
                result = intersect_bisectors(balls)
            except EmptyIntersectionError:
                continue
            if result.sheet_vertex is None:
                continue
            shifted = intersect_bisectors([ball.shifted(shift) for ball in balls])
            compared += 1
            scale = max(5.0, np.max(np.abs(result.sheet_vertex)), shift)
            np.testing.assert_allclose(
                shifted.sheet_vertex, result.sheet_vertex, atol=1e-10 * scale
            )
            assert abs(shifted.tangent_z - result.tangent_z - shift) <= 1e-10 * scale
        assert compared > 0

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_diagnostics(self, n):
        rng = np.random.default_rng(70 + n)
        checked = 0
        for _ in range(50):
            balls = random_balls(n + 1, n, rng)
            try:
                result = intersect_bisectors(balls)
            except EmptyIntersectionError:
                continue
            delegated = False
            for state in result.states:
                diagnostics = verify_state(state)
                assert diagnostics.hp_orthogonality <= 1e-9
                delegated = delegated or state.delegated
                if delegated:
                    # Slices past a delegation carry no u_{k-1} relation to v_1.
                    assert not state.delegated or state.u_prev is None
                    continue
                assert diagnostics.u_dot_v1 <= 1e-9
                assert diagnostics.v_dot_v1 > 0.0
                assert diagnostics.success, diagnostics.message
                if state.u_prev is not None:
                    checked += 1
        assert checked > 0


class TestTouching:

    def test_ray(self):
        # Descartes circles with the signs (1, -1, -1) and a shift of 4.
        balls = [Ball([0.0, 0.0], 5.0), Ball([3.0, 0.0], 2.0), Ball([0.0, 4.0], 1.0)]
        result = intersect_bisectors(balls, debug=True)
        assert result.kind is ResultKind.POINT_PAIR
        assert result.dim == 0
        assert result.states == ()
        np.testing.assert_allclose(result.sheet_vertex, [0.0, 0.0], atol=1e-12)
        assert result.tangent_z == pytest.approx(5.0, abs=1e-12)
        assert result.candidates[0].valid
        spread = tangency_spread(result.sheet_vertex, balls)[0]
        assert spread <= 1e-12

    def test_ray_offset(self):
        balls = [Ball([0.0, 0.0], 3.0), Ball([3.0, 0.0], 6.0), Ball([0.0, 4.0], 1.0)]
        result = intersect_bisectors(balls)
        np.testing.assert_allclose(result.sheet_vertex, [3.0, 0.0], atol=1e-12)
        assert result.tangent_z == pytest.approx(6.0, abs=1e-12)

    def test_behind(self):
        balls = [Ball([0.0, 0.0], 3.0), Ball([3.0, 0.0], 6.0), Ball([0.0, 4.0], 7.0)]
        with pytest.raises(EmptyIntersectionError):
            intersect_bisectors(balls)

    def test_pair(self):
        with pytest.raises(ContainedBallError):
            intersect_bisectors([Ball([0.0, 0.0], 3.0), Ball([1.0, 0.0], 2.0)])


class TestConic:

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_random(self, n):
        rng = np.random.default_rng(40 + n)
        sampled = 0
        for _ in range(200):
            count = rng.integers(3, n + 1)
            balls = random_balls(count, n, rng)
            try:
                result = intersect_bisectors(balls, debug=True)
                x = sample_result(result, 50, rng)
            except EmptyIntersectionError:
                continue
            assert result.kind is ResultKind.CONIC
            assert result.dim == n - count + 1
            assert result.hull_basis.shape == (count - 2, n)
            for state in result.states:
                if state.delegated:
                    break
                assert verify_state(state).success
            sampled += x.shape[0]
            size = np.maximum(5.0, np.max(np.abs(x), axis=1))
            spread = tangency_spread(x, balls)[0]
            assert np.all(spread <= 1e-7 * size)
            offsets = (x - result.conic.center) @ result.hull_basis.T
            assert np.all(np.abs(offsets) <= 1e-8 * size[:, np.newaxis])
            for ball in balls[1:]:
                residual = bisector(balls[0], ball).residual(x)
                assert np.all(np.abs(residual) <= 1e-7 * size)
        assert sampled > 0

    def test_shift(self):
        balls = [
            Ball([0.0, 0.0, 0.0], 3.0),
            Ball([6.0, 0.0, 0.0], 2.0),
            Ball([0.0, 6.0, 0.0], 1.0),
        ]
        result = intersect_bisectors(balls)
        shifted = intersect_bisectors([ball.shifted(2.5) for ball in balls])
        assert shifted.kind is result.kind
        np.testing.assert_allclose(shifted.conic.center, result.conic.center, atol=1e-9)
        np.testing.assert_allclose(shifted.conic.axis, result.conic.axis, atol=1e-9)
        assert shifted.conic.a == pytest.approx(result.conic.a, rel=1e-9)
        np.testing.assert_allclose(shifted.hull_basis, result.hull_basis, atol=1e-9)

    def test_two_balls(self):
        balls = [Ball([0.0, 0.0, 0.0], 2.0), Ball([3.0, 0.0, 0.0], 1.0)]
        result = intersect_bisectors(balls)
        assert result.kind is ResultKind.CONIC
        assert result.dim == 2
        assert result.hull_basis.shape == (0, 3)
        np.testing.assert_allclose(result.sheet_vertex, [1.0, 0.0, 0.0])
        assert result.tangent_z == pytest.approx(3.0)
        assert result.conic.eccentricity == pytest.approx(3.0)


class TestFlat:

    def test_line(self):
        balls = [Ball([0.0, 0.0], 1.0), Ball([2.0, 0.0], 1.0)]
        result = intersect_bisectors(balls)
        assert result.kind is ResultKind.FLAT
        assert result.dim == 1
        np.testing.assert_allclose(result.flat_point, [1.0, 0.0])
        np.testing.assert_allclose(np.abs(result.flat_basis), [[0.0, 1.0]], atol=1e-12)
        x = sample_result(result, 20, 0)
        assert x.shape == (20, 2)
        np.testing.assert_allclose(x[:, 0], 1.0)

    def test_point(self):
        balls = [Ball([0.0, 0.0], 1.0), Ball([2.0, 0.0], 1.0), Ball([0.0, 2.0], 1.0)]
        result = intersect_bisectors(balls)
        assert result.kind is ResultKind.FLAT
        assert result.dim == 0
        np.testing.assert_allclose(result.flat_point, [1.0, 1.0])
        assert result.tangent_z == pytest.approx(np.sqrt(2.0) + 1.0)
        assert result.candidates[0].valid


class TestExceptions:

    def test_empty_result(self):
        result = CascadeResult(ResultKind.EMPTY, None, np.empty((0, 2)))
        assert result.dim == -1
        assert result.valid_points.shape == (0, 2)
        with pytest.raises(EmptyIntersectionError):
            sample_result(result, 5)

    def test_exceptions(self):
        with pytest.raises(InvalidInputError):
            intersect_bisectors([Ball([0.0, 0.0], 1.0)])
        with pytest.raises(TooManyBallsError):
            intersect_bisectors(descartes() + [Ball([5.0, 5.0], 0.5)])
        with pytest.raises(AffineDependenceError):
            intersect_bisectors([
                Ball([0.0, 0.0, 0.0], 3.0),
                Ball([1.0, 0.0, 0.0], 2.0),
                Ball([2.0, 0.0, 0.0], 1.0),
            ])
        with pytest.raises(ContainedBallError):
            intersect_bisectors([
                Ball([0.0, 0.0, 0.0], 3.0),
                Ball([1.0, 0.0, 0.0], 1.0),
                Ball([0.0, 5.0, 0.0], 0.5),
            ])
        with pytest.raises(ValueError):
            sample_result(intersect_bisectors(descartes()), 0)
