import json

import numpy as np
import pytest
from click.testing import CliRunner

from ..cli import EXIT_INFEASIBLE, EXIT_INPUT, EXIT_OK, emit_samples, main, run
from ..conics import hyperboloid_from_foci
from ..geometry import Hyperplane
from ..slicer import slice_conic

DESCARTES = [
    {"center": [0.0, 0.0], "radius": 1.0},
    {"center": [3.0, 0.0], "radius": 2.0},
    {"center": [0.0, 4.0], "radius": 3.0},
]

HYPERBOLOID = {
    "kind": "HyperboloidTwoSheets",
    "center": [0.0, 0.0, 0.0],
    "axis": [0.0, 0.0, 1.0],
    "c": 2.0,
    "a": 1.0,
}


@pytest.fixture
def write(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write


def invoke(*args):
    result = CliRunner().invoke(main, list(args))
    return result, json.loads(result.stdout) if result.stdout.strip() else None


class TestCommands:

    def test_slice(self, write):
        conic = write("conic.json", HYPERBOLOID)
        plane = write("plane.json", {"normal": [1.0, 0.0, 0.0], "offset": 1.0})
        result, data = invoke("slice", "--conic", conic, "--plane", plane)
        assert result.exit_code == EXIT_OK
        assert data["class"] == "HyperbolicSlice"
        assert data["conic"]["a"] ** 2.0 == pytest.approx(4.0 / 3.0)

    def test_slice_point(self, write):
        conic = write("conic.json", HYPERBOLOID)
        plane = write("plane.json", {"normal": [0.0, 0.0, 1.0], "offset": 1.0})
        result, data = invoke("slice", "--conic", conic, "--plane", plane)
        assert result.exit_code == EXIT_OK
        assert data["class"] == "PointSlice"
        assert data["center"] == [0.0, 0.0, 1.0]

    def test_slice_empty(self, write):
        conic = write("conic.json", HYPERBOLOID)
        plane = write("plane.json", {"normal": [0.0, 0.0, 1.0], "offset": 0.5})
        result, data = invoke("slice", "--conic", conic, "--plane", plane)
        assert result.exit_code == EXIT_INFEASIBLE
        assert data["error"] == "empty_intersection"

    def test_bisector(self, write):
        balls = write("balls.json", {"balls": DESCARTES})
        result, data = invoke("bisector", "--balls", balls, "--pair", "0", "1")
        assert result.exit_code == EXIT_OK
        assert data["type"] == "sheet"
        assert data["larger"]["radius"] == 2.0
        result, data = invoke("bisector", "--balls", balls)
        assert result.exit_code == EXIT_OK
        assert data["source_case"] == "distinct"
        result, data = invoke("bisector", "--balls", balls, "--pair", "0", "5")
        assert result.exit_code == EXIT_INPUT
        assert data["error"] == "invalid_input"

    def test_intersect(self, write):
        balls = write("balls.json", {"balls": DESCARTES})
        result, data = invoke("intersect", "--balls", balls, "--debug")
        assert result.exit_code == EXIT_OK
        assert data["kind"] == "PointPair"
        assert data["tangent_z"] == pytest.approx(6.0)
        np.testing.assert_allclose(data["sheet_vertex"], [3.0, 4.0], atol=1e-9)
        assert "steps" not in data

    def test_apollonius(self, write):
        circles = write("circles.json", {"circles": DESCARTES})
        result, data = invoke("apollonius", "--circles", circles, "--pretty")
        assert result.exit_code == EXIT_OK
        assert len(data["circles"]) == 8
        assert sum(circle["degenerate"] for circle in data["circles"]) == 3
        assert data["omitted"] == []
        radii = [circle["radius"] for circle in data["circles"]]
        assert any(r == pytest.approx(6.0) for r in radii)
        assert any(r == pytest.approx(6.0 / 23.0) for r in radii)
        assert "omitted" in data
        result, data = invoke("apollonius", "--circles", circles, "--shift", "1.0")
        assert result.exit_code == EXIT_INPUT
        assert data["error"] == "invalid_constant"

    def test_sample(self, write):
        conic = write("conic.json", HYPERBOLOID)
        plane = write("plane.json", {"normal": [1.0, 0.0, 0.0], "offset": 1.0})
        args = ("sample", "--conic", conic, "--plane", plane, "--count", "20", "--seed", "3")
        first, data = invoke(*args)
        second, _ = invoke(*args)
        assert first.exit_code == EXIT_OK
        assert first.stdout == second.stdout
        x = np.array(data["points"])
        assert x.shape == (20, 3)
        np.testing.assert_allclose(x[:, 0], 1.0)
        balls = write("balls.json", {"balls": DESCARTES})
        result, data = invoke("sample", "--balls", balls)
        assert result.exit_code == EXIT_OK
        assert any(np.allclose(x, [3.0, 4.0]) for x in data["points"])
        result, data = invoke("sample", "--balls", balls, "--conic", conic)
        assert result.exit_code == EXIT_INPUT

    def test_verify(self, write):
        balls = write("balls.json", {"balls": DESCARTES})
        result, data = invoke("verify", "--balls", balls)
        assert result.exit_code == EXIT_OK
        assert all(step["diagnostics"]["success"] for step in data["steps"])
        circles = write("circles.json", {"circles": DESCARTES})
        result, data = invoke("verify", "--circles", circles)
        assert result.exit_code == EXIT_OK
        assert all(circle["residual"] <= 1e-8 for circle in data["circles"])
        assert len(data["circles"]) == 8
        result, data = invoke("verify")
        assert result.exit_code == EXIT_INPUT


class TestErrors:

    def test_malformed(self, write, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"balls\": [")
        result, data = invoke("intersect", "--balls", str(path))
        assert result.exit_code == EXIT_INPUT
        assert data["error"] == "invalid_input"
        balls = write("balls.json", {"balls": DESCARTES + [{"center": [5.0, 5.0], "radius": 0.5}]})
        result, data = invoke("intersect", "--balls", balls)
        assert result.exit_code == EXIT_INPUT
        assert data["error"] == "too_many_balls"

    def test_contained(self, write):
        balls = write("balls.json", {"balls": [
            {"center": [0.0, 0.0], "radius": 3.0},
            {"center": [1.0, 0.0], "radius": 1.0},
        ]})
        result, data = invoke("intersect", "--balls", balls)
        assert result.exit_code == EXIT_INFEASIBLE
        assert data["error"] == "contained_ball"

    def test_run(self, write, capsys):
        balls = write("balls.json", {"balls": DESCARTES})
        assert run(["intersect", "--balls", balls]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["kind"] == "PointPair"
        assert run(["intersect", "--balls", balls, "--tol", "-1"]) == EXIT_INPUT
        assert run(["intersect"]) == EXIT_INPUT


class TestEmitSamples:

    def test_slice(self):
        spec = hyperboloid_from_foci([0.0, 0.0, 2.0], [0.0, 0.0, -2.0], 2.0)
        result = slice_conic(spec, Hyperplane([1.0, 0.0, 0.0], 1.0))
        points = emit_samples(result, 10, seed=0)
        assert len(points) == 10
        assert emit_samples(spec, 10, seed=0) == emit_samples(spec, 10, seed=0)
        with pytest.raises(TypeError):
            emit_samples("conic", 10)
