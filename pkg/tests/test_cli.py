import numpy as np
import pytest

from linident import SystemSpec, identify, predict, simulate_discrete
from linident import io
from linident.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def fib_system(tmp_path):
    path = tmp_path / "fib.json"
    io.write_system(SystemSpec("discrete", [[0, 1], [1, 1]], [1, 0]), path)
    return path


@pytest.fixture
def fib_series(tmp_path):
    path = tmp_path / "fib.txt"
    path.write_text("1\n1\n2\n3\n5\n")
    return path


class TestIdentifyCommand:
    def test_fibonacci_model(self, capsys, tmp_path, fib_series):
        out = tmp_path / "model.json"
        code, _, _ = run(capsys, "identify", "--series", str(fib_series),
                         "--n", "2", "--out", str(out))
        assert code == 0
        doc = io.read_report(out)
        assert doc["coeffs"] == [-1.0, -1.0]
        assert doc["residual"] == 0.0

    def test_singular_series_exits_one(self, capsys, tmp_path):
        p = tmp_path / "const.txt"
        p.write_text("7\n7\n7\n7\n")
        code, _, err = run(capsys, "identify", "--series", str(p), "--n", "2")
        assert code == 1
        assert "SingularHankel" in err

    def test_bad_series_exits_two(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1\nabc\n")
        code, _, err = run(capsys, "identify", "--series", str(p), "--n", "2")
        assert code == 2
        assert "ParseError" in err


class TestPredictCommand:
    def test_continuation(self, capsys, tmp_path, fib_series):
        model = tmp_path / "model.json"
        run(capsys, "identify", "--series", str(fib_series), "--n", "2",
            "--out", str(model))
        code, out, _ = run(capsys, "predict", "--model", str(model),
                           "--seed-window", "5,8", "--steps", "3")
        assert code == 0
        assert [float(v) for v in out.split()] == [13, 21, 34]

    def test_mismatched_window_exits_two(self, capsys, tmp_path, fib_series):
        model = tmp_path / "model.json"
        run(capsys, "identify", "--series", str(fib_series), "--n", "2",
            "--out", str(model))
        code, _, err = run(capsys, "predict", "--model", str(model),
                           "--seed-window", "5", "--steps", "3")
        assert code == 2
        assert "usage" in err


class TestObservabilityCommand:
    def test_unobservable_identity(self, capsys, tmp_path):
        path = tmp_path / "sys.json"
        io.write_system(SystemSpec("discrete", np.eye(2), [1, 0]), path)
        code, out, _ = run(capsys, "observability", "--system", str(path))
        assert code == 0
        assert '"observable": false' in out
        assert '"rank": 1' in out

    def test_observable_system(self, capsys, fib_system):
        code, out, _ = run(capsys, "observability", "--system", str(fib_system))
        assert code == 0
        assert '"observable": true' in out


class TestSpectrumCommand:
    def test_rotation(self, capsys, tmp_path):
        import math
        series = tmp_path / "rot.txt"
        lines = ["# step=0.3"] + [format(math.cos(0.3 * i), ".17g") for i in range(4)]
        series.write_text("\n".join(lines) + "\n")
        model = tmp_path / "model.json"
        run(capsys, "identify", "--series", str(series), "--n", "2",
            "--out", str(model))
        out_path = tmp_path / "spec.json"
        code, _, _ = run(capsys, "spectrum", "--model", str(model),
                         "--out", str(out_path))
        assert code == 0
        doc = io.read_report(out_path)
        eig = np.array(doc["eigenvalues"])
        np.testing.assert_allclose(sorted(eig[:, 1]), [-1, 1], atol=1e-9)
        assert doc["aliasing_risk"] is False

    def test_missing_step_exits_one(self, capsys, tmp_path, fib_series):
        model = tmp_path / "model.json"
        run(capsys, "identify", "--series", str(fib_series), "--n", "2",
            "--out", str(model))
        code, _, err = run(capsys, "spectrum", "--model", str(model))
        assert code == 1
        assert "MissingStep" in err


class TestSimulatePipeline:
    def test_cli_matches_library_exactly(self, capsys, tmp_path, fib_system):
        series_path = tmp_path / "series.txt"
        code, _, _ = run(capsys, "simulate", "--system", str(fib_system),
                         "--x0", "1,1", "--len", "8", "--out", str(series_path))
        assert code == 0
        lib_series = simulate_discrete(
            SystemSpec("discrete", [[0, 1], [1, 1]], [1, 0]), [1, 1], 8)
        np.testing.assert_array_equal(io.read_series(series_path).values,
                                      lib_series.values)

        model_path = tmp_path / "model.json"
        run(capsys, "identify", "--series", str(series_path), "--n", "2",
            "--out", str(model_path))
        lib_report = identify(lib_series, 2)
        cli_model = io.read_model(model_path)
        np.testing.assert_array_equal(cli_model.coeffs, lib_report.model.coeffs)

        code, out, _ = run(capsys, "predict", "--model", str(model_path),
                           "--seed-window", "8,13", "--steps", "5")
        lib_future = predict(lib_report.model, [8, 13], 5)
        np.testing.assert_array_equal([float(v) for v in out.split()],
                                      lib_future.values)


class TestMonteCarloCommand:
    def test_report_fields(self, capsys, tmp_path):
        out = tmp_path / "mc.json"
        code, _, _ = run(capsys, "montecarlo", "--property", "observable",
                         "--n", "3", "--trials", "50", "--seed", "9",
                         "--out", str(out))
        assert code == 0
        doc = io.read_report(out)
        assert doc["trials"] == 50
        assert doc["successes"] + doc["failures"] + doc["numerical_rejections"] == 50
        assert doc["seed"] == 9
        assert doc["sampling_law"] == "uniform-on-box"

    def test_seeded_runs_are_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["montecarlo", "--property", "krylov-independent", "--n", "3",
                "--trials", "200", "--seed", "123"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()

    def test_bad_box_exits_two(self, capsys):
        code, _, err = run(capsys, "montecarlo", "--property", "observable",
                           "--n", "3", "--trials", "10", "--box", "1")
        assert code == 2


class TestUsage:
    def test_unknown_command_exits_two(self, capsys):
        assert main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_missing_input_file_exits_one(self, capsys, tmp_path):
        code, _, err = run(capsys, "identify", "--series",
                           str(tmp_path / "nope.txt"), "--n", "2")
        assert code == 1
        assert "IoError" in err
