"""End-to-end tests of the splab command line."""

import csv
import io
import json

import numpy as np
import pytest

from splab.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out


class TestSolve:
    def test_single_point_csv(self, capsys):
        code, out = run(capsys, "solve", "--h", "0.7", "--lambda", "1", "--vb", "0.1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == (
            "h,lambda,v_B,gamma,mu0,kind,price,low_price,alpha,"
            "profit_G,profit_B,region,candidate_level"
        )
        assert lines[1] == "0.7,1,0.1,0.5,0.5,pooling,0.55,,,0.4675,0.3575,R3,3"
        assert len(lines) == 2

    def test_single_point_json(self, capsys):
        code, out = run(
            capsys, "solve", "--h", "0.7", "--lambda", "1", "--vb", "0.1",
            "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 1
        row = rows[0]
        assert row["kind"] == "pooling" and row["region"] == "R3"
        assert row["price"] == pytest.approx(0.55)
        assert row["low_price"] is None and row["alpha"] is None

    def test_mixed_point_reports_both_prices(self, capsys):
        code, out = run(
            capsys, "solve", "--h", "1", "--lambda", "0", "--vb", "0.22",
            "--format", "json",
        )
        row = json.loads(out)[0]
        assert row["kind"] == "mixed"
        assert row["price"] == pytest.approx(0.88)
        assert row["low_price"] == pytest.approx(0.22)
        assert 0 < row["alpha"] < 1

    def test_rejects_ranges(self, capsys):
        code, _ = run(capsys, "solve", "--h", "0.5:1:3", "--vb", "0.1")
        assert code == 2


class TestSweep:
    def test_row_order_is_grid_order(self, capsys):
        code, out = run(
            capsys, "sweep", "--h", "0.5:1:2", "--lambda", "0:1:2", "--vb", "0.1"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        coords = [(r["h"], r["lambda"]) for r in rows]
        assert coords == [("0.5", "0"), ("0.5", "1"), ("1", "0"), ("1", "1")]

    def test_round_trip_is_byte_identical(self, tmp_path, capsys):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            code = main(
                ["sweep", "--h", "0.5:1:11", "--lambda", "0:1:5",
                 "--vb", "0.1", "--out", str(p)]
            )
            assert code == 0
        capsys.readouterr()
        a, b = (p.read_bytes() for p in paths)
        assert a == b
        assert b"\r" not in a  # LF-only line endings
        a.decode("utf-8")

    def test_none_cells_have_empty_numeric_fields(self, capsys):
        code, out = run(capsys, "sweep", "--h", "1", "--lambda", "0.5", "--vb", "0.1")
        row = next(csv.DictReader(io.StringIO(out)))
        assert row["kind"] == "none"
        assert row["price"] == "" and row["profit_G"] == ""


class TestRegions:
    def test_mixed_band_in_naive_market(self, capsys):
        code, out = run(
            capsys, "regions", "--h", "0.95:1:3", "--lambda", "0", "--vb", "0.22"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["classification"] for r in rows] == ["mixed", "mixed", "mixed"]

    def test_classification_vocabulary(self, capsys):
        code, out = run(
            capsys, "regions", "--h", "0.5:1:11", "--lambda", "0:1:5", "--vb", "0.1"
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        allowed = {"R1", "R2", "R3", "R4", "mixed", "none"}
        assert {r["classification"] for r in rows} <= allowed


class TestCompare:
    def test_crossings_match_corollary_thresholds(self, capsys):
        code, out = run(capsys, "compare", "--h", "0.5:1:501", "--vb", "0.1")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        hs = np.array([float(r["h"]) for r in rows])
        gap_G = np.array(
            [float(r["profit_G_naive"]) - float(r["profit_G_soph"]) for r in rows]
        )
        gap_B = np.array(
            [float(r["profit_B_naive"]) - float(r["profit_B_soph"]) for r in rows]
        )
        # Ignore the h=0.5 tie, then find strict sign changes.
        signs_G = np.sign(gap_G[np.abs(gap_G) > 1e-13])
        cross_G = hs[np.abs(gap_G) > 1e-13][:-1][np.diff(signs_G) != 0]
        signs_B = np.sign(gap_B[np.abs(gap_B) > 1e-13])
        cross_B = hs[np.abs(gap_B) > 1e-13][:-1][np.diff(signs_B) != 0]
        assert len(cross_G) == 2
        assert cross_G[0] == pytest.approx(2 / 2.9, abs=0.01)
        assert cross_G[1] == pytest.approx(0.92796, abs=0.01)
        assert len(cross_B) == 1
        assert cross_B[0] == pytest.approx(0.77196, abs=0.01)

    def test_uninformative_row_is_flat(self, capsys):
        code, out = run(capsys, "compare", "--h", "0.5", "--vb", "0.1")
        row = next(csv.DictReader(io.StringIO(out)))
        assert set(row.values()) == {"0.5", "0.55"}


class TestThresholdsCommand:
    def test_single_object_row(self, capsys):
        code, out = run(
            capsys, "thresholds", "--h", "0.7", "--lambda", "0.3", "--vb", "0.1",
            "--format", "json",
        )
        assert code == 0
        row = json.loads(out)[0]
        assert row["h_star"] == pytest.approx(0.8058, abs=1e-3)
        assert row["h_underline"] == pytest.approx(0.68966, abs=1e-4)
        assert row["v_bar"] == pytest.approx(0.09384, abs=1e-4)


class TestConfigAndErrors:
    def test_config_supplies_defaults_and_flags_override(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"h": 0.7, "lambda": 1, "v_B": 0.1}))
        code, out = run(capsys, "solve", "--config", str(cfg))
        assert code == 0 and ",R3," in out
        code, out = run(capsys, "solve", "--config", str(cfg), "--h", "0.55")
        assert code == 0 and ",R1," in out

    def test_unknown_config_key_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"h": 0.7, "bogus": 1}))
        code, _ = run(capsys, "solve", "--config", str(cfg))
        assert code == 2

    def test_missing_h_rejected(self, capsys):
        code, _ = run(capsys, "solve", "--vb", "0.1")
        assert code == 2

    def test_domain_errors_exit_two(self, capsys):
        code, _ = run(capsys, "solve", "--h", "1.2", "--vb", "0.1")
        assert code == 2
        code, _ = run(capsys, "solve", "--h", "0.7", "--lambda", "1", "--gamma", "0.3")
        assert code == 2

    def test_bad_axis_syntax_exit_two(self, capsys):
        code, _ = run(capsys, "sweep", "--h", "0.5:1", "--vb", "0.1")
        assert code == 2
        code, _ = run(capsys, "sweep", "--h", "0.5:1:1", "--vb", "0.1")
        assert code == 2


class TestVerify:
    def test_quick_suite_passes(self, capsys):
        code, out = run(capsys, "verify", "--seed", "0", "--draws", "20000")
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
        assert len(lines) == 5
        assert all(l.startswith("PASS") for l in lines)
