import numpy as np
import pytest

from linident import EmptySeries, ParseError, TimeSeries, identify
from linident import io


class TestReadSeries:
    def test_plain_values(self, tmp_path):
        p = tmp_path / "s.txt"
        p.write_text("1\n1\n2\n3\n5\n")
        series = io.read_series(p)
        np.testing.assert_array_equal(series.values, [1, 1, 2, 3, 5])
        assert series.step is None

    def test_step_header(self, tmp_path):
        p = tmp_path / "s.txt"
        p.write_text("# step=0.3\n1.0\n0.955\n")
        series = io.read_series(p)
        np.testing.assert_array_equal(series.values, [1.0, 0.955])
        assert series.step == 0.3

    def test_parse_error_carries_line(self, tmp_path):
        p = tmp_path / "s.txt"
        p.write_text("1\nabc\n")
        with pytest.raises(ParseError) as exc:
            io.read_series(p)
        assert exc.value.line == 2

    def test_empty_series(self, tmp_path):
        p = tmp_path / "s.txt"
        p.write_text("# just a comment\n")
        with pytest.raises(EmptySeries):
            io.read_series(p)

    def test_round_trip(self, tmp_path):
        series = TimeSeries([1.0, 1 / 3, 0.955], step=0.125)
        p = tmp_path / "s.txt"
        io.write_series(series, p)
        back = io.read_series(p)
        np.testing.assert_array_equal(back.values, series.values)
        assert back.step == series.step


class TestReports:
    def test_byte_identical_writes(self, tmp_path):
        doc = {"b": 1 / 3, "a": [1.0, 2.5e-17], "nested": {"z": True, "y": None}}
        p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
        io.write_report(doc, p1)
        io.write_report(doc, p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_round_trip_exact(self, tmp_path):
        doc = {"x": 0.1 + 0.2, "ints": [1, 2, 3], "s": "text"}
        p = tmp_path / "r.json"
        io.write_report(doc, p)
        back = io.read_report(p)
        assert back["x"] == doc["x"]
        assert back["ints"] == doc["ints"]

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(OSError):
            io.write_report({"a": 1}, tmp_path / "missing" / "r.json")


class TestModelDocuments:
    def test_model_round_trip(self, tmp_path):
        series = TimeSeries([1, 1, 2, 3, 5])
        report = identify(series, 2)
        p = tmp_path / "model.json"
        io.write_model(report, p)
        model = io.read_model(p)
        np.testing.assert_array_equal(model.coeffs, report.model.coeffs)
        assert model.offset is None
        assert model.step is None
        doc = io.read_report(p)
        assert doc["format_version"] == 1
        assert doc["order"] == 2

    def test_system_round_trip(self, tmp_path):
        from linident import SystemSpec
        sys = SystemSpec("continuous", [[0, 1], [-1, 0]], [1, 0], step=0.3)
        p = tmp_path / "sys.json"
        io.write_system(sys, p)
        back = io.read_system(p)
        np.testing.assert_array_equal(back.a, sys.a)
        np.testing.assert_array_equal(back.c, sys.c)
        assert back.step == sys.step
        assert back.kind == "continuous"
