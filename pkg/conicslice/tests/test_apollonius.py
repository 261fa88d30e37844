import itertools
import logging

import numpy as np
import pytest

from ..apollonius import (
    SignPattern,
    TangentCircle,
    solve_apollonius,
    verify_tangency,
)
from ..bisectors import Ball
from ..settings import OmitReason, Tangency
from ..utils import (
    AffineDependenceError,
    InvalidConstantError,
    InvalidInputError,
)


def descartes(factor=1.0):
    return [
        Ball([0.0, 0.0], factor * 1.0),
        Ball([3.0, 0.0], factor * 2.0),
        Ball([0.0, 4.0], factor * 3.0),
    ]


class TestSignPattern:

    def test_simple(self):
        pattern = SignPattern((1, -1, 1))
        assert len(pattern) == 3
        assert str(pattern) == "+-+"
        assert (-pattern).signs == (-1, 1, -1)
        assert pattern.tangencies == (
            Tangency.INTERNAL,
            Tangency.EXTERNAL,
            Tangency.INTERNAL,
        )
        assert SignPattern([1.0, -1.0]) == SignPattern((1, -1))

    def test_exceptions(self):
        with pytest.raises(InvalidInputError):
            SignPattern((1, 0))


class TestVerifyTangency:

    def test_simple(self):
        circle = TangentCircle([3.0, 4.0], 6.0, SignPattern((1, 1, 1)))
        assert verify_tangency(circle, descartes()) == 0.0
        circle = TangentCircle([0.0, 0.0], 1.0, SignPattern((1, -1, -1)))
        assert verify_tangency(circle, descartes()) == 0.0
        circle = TangentCircle([3.0, 4.0], 7.0, SignPattern((1, 1, 1)))
        assert verify_tangency(circle, descartes()) == pytest.approx(1.0)

    def test_degenerate(self):
        circle = TangentCircle([0.0, 0.0], 1.0, SignPattern((-1, 1, 1)), degenerate=True)
        assert circle.solved_pattern.signs == (1, -1, -1)
        assert circle.tangencies == (
            Tangency.INTERNAL,
            Tangency.EXTERNAL,
            Tangency.EXTERNAL,
        )
        assert verify_tangency(circle, descartes()) == 0.0
        circle = TangentCircle([0.0, 0.0], 1.0, SignPattern((-1, 1, 1)))
        assert verify_tangency(circle, descartes()) == pytest.approx(6.0)

    def test_exceptions(self):
        circle = TangentCircle([3.0, 4.0], 6.0, SignPattern((1, 1)))
        with pytest.raises(InvalidInputError):
            verify_tangency(circle, descartes())


class TestSolveApollonius:

    def test_descartes(self):
        circles = solve_apollonius(descartes())
        assert len(circles) == 8
        assert [c.pattern.signs for c in circles] == list(
            itertools.product((1, -1), repeat=3)
        )
        found = {c.pattern.signs: c for c in circles}
        outer = found[(1, 1, 1)]
        np.testing.assert_allclose(outer.center, [3.0, 4.0], atol=1e-9)
        assert outer.radius == pytest.approx(6.0, abs=1e-9)
        inner = found[(-1, -1, -1)]
        assert inner.radius == pytest.approx(6.0 / 23.0, abs=1e-9)
        assert not outer.degenerate and not inner.degenerate
        for i, ball in enumerate(descartes()):
            signs = tuple(1 if j == i else -1 for j in range(3))
            for pattern, degenerate in ((signs, False), (tuple(-s for s in signs), True)):
                circle = found[pattern]
                assert circle.degenerate is degenerate
                np.testing.assert_allclose(circle.center, ball.center, atol=1e-9)
                assert circle.radius == pytest.approx(ball.radius, abs=1e-9)
                assert circle.solved_pattern.signs == signs
        for circle in circles:
            assert circle.residual <= 1e-8 * 4.0
            assert verify_tangency(circle, descartes()) == pytest.approx(circle.residual)

    def test_perturbed(self):
        balls = descartes(0.9)
        circles = solve_apollonius(balls, debug=True)
        assert len(circles) == 8
        for circle in circles:
            assert circle.radius > 0.0
            assert verify_tangency(circle, balls) <= 1e-8 * 4.0
        for first, second in itertools.combinations(circles, 2):
            distinct = (
                np.linalg.norm(first.center - second.center) > 1e-6
                or abs(first.radius - second.radius) > 1e-6
            )
            assert distinct

    def test_shift(self):
        balls = descartes(0.9)
        default = sorted(c.radius for c in solve_apollonius(balls))
        shifted = sorted(c.radius for c in solve_apollonius(balls, shift=10.0))
        np.testing.assert_allclose(shifted, default, rtol=1e-8)

    def test_omitted(self, caplog):
        with caplog.at_level(logging.INFO, logger="conicslice.apollonius"):
            circles, omitted = solve_apollonius(descartes(), return_omitted=True)
        patterns = {c.pattern.signs for c in circles}
        patterns |= {o.pattern.signs for o in omitted}
        assert patterns == set(itertools.product((1, -1), repeat=3))
        assert len(omitted) == 0
        assert "Pattern -++ solved by a touching input circle" in caplog.text
        for item in omitted:
            assert isinstance(item.reason, OmitReason)
            assert item.message
            assert f"Pattern {item.pattern} omitted" in caplog.text

    def test_spheres(self):
        balls = [
            Ball([0.0, 0.0, 0.0], 1.0),
            Ball([4.0, 0.0, 0.0], 1.2),
            Ball([0.0, 4.0, 0.0], 1.4),
            Ball([0.0, 0.0, 4.0], 1.6),
        ]
        circles = solve_apollonius(balls)
        assert len(circles) >= 2
        scale = 4.0
        for circle in circles:
            assert len(circle.pattern) == 4
            assert verify_tangency(circle, balls) <= 1e-8 * scale

    def test_exceptions(self):
        with pytest.raises(InvalidInputError):
            solve_apollonius(descartes()[:2])
        with pytest.raises(InvalidInputError):
            solve_apollonius([])
        with pytest.raises(InvalidInputError):
            solve_apollonius(descartes()[:2] + [Ball([0.0, 4.0], 0.0)])
        with pytest.raises(InvalidConstantError):
            solve_apollonius(descartes(), shift=3.0)
        with pytest.raises(AffineDependenceError):
            solve_apollonius([
                Ball([0.0, 0.0], 0.1),
                Ball([1.0, 1.0], 0.2),
                Ball([2.0, 2.0], 0.3),
            ])
