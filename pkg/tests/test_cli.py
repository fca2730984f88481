"""CLI subcommands: exit codes, JSON reports, atomic output."""
import json
import math

import pytest

from rootsep.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestVerify:
    def test_main_holds(self, capsys):
        code, report = run_cli(
            ["verify", "--poly", "x^2-1", "--graph", '{"edges":[[0,1]]}', "--variant", "main"],
            capsys,
        )
        assert code == 0
        assert report["verdict"] == "holds"
        assert abs(report["margin"] - (2 - math.sqrt(3) / 2)) < 1e-9
        assert report["lhs"]["mid"] == 2.0
        assert set(report["components"]) == {
            "sdisc_sqrt", "mahler_power", "edge_factor", "r_power", "multiplicity_factor",
        }
        assert report["certificate"]["det_w"]["re"] == 2.0

    def test_index_out_of_range(self, capsys):
        code, report = run_cli(
            ["verify", "--poly", "x^2-1", "--graph", '{"edges":[[0,7]]}'],
            capsys,
        )
        assert code == 1
        assert report["error"]["type"] == "ValidationError"

    def test_parse_error_position(self, capsys):
        code, report = run_cli(
            ["verify", "--poly", "x^2 + $", "--graph", '{"edges":[]}'],
            capsys,
        )
        assert code == 1
        assert report["error"]["position"] == 6

    def test_bad_precision(self, capsys):
        code, report = run_cli(
            ["verify", "--poly", "x^2-1", "--graph", '{"edges":[]}', "--precision", "100"],
            capsys,
        )
        assert code == 1

    def test_preset(self, capsys):
        code, report = run_cli(
            ["verify", "--poly", "x*(x-1)*(x-2)", "--preset", "path"],
            capsys,
        )
        assert code == 0
        assert report["graph"]["edges"] == [[0, 1], [1, 2]]

    def test_sep_product(self, capsys):
        code, report = run_cli(
            ["verify", "--poly", "x^2-1", "--variant", "sep_product"],
            capsys,
        )
        assert code == 0
        assert abs(report["lhs"]["mid"] - 4) < 1e-9
        assert abs(report["rhs"]["mid"] - 0.75) < 1e-9

    def test_inconclusive_equality_exit_code(self, capsys):
        # LHS = RHS = 1 exactly: inconclusive at every precision, exit 2
        code, report = run_cli(
            ["verify", "--poly", "x^2-1", "--graph", '{"edges":[]}',
             "--ceiling", "128"],
            capsys,
        )
        assert code == 2
        assert report["verdict"] == "inconclusive"


class TestOut:
    def test_atomic_write(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = main(
            ["verify", "--poly", "x^2-1", "--graph", '{"edges":[[0,1]]}',
             "--out", str(out)]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["verdict"] == "holds"
        assert not list(tmp_path.glob(".report-*"))


class TestSweep:
    def test_small_sweep(self, capsys):
        code, report = run_cli(
            ["sweep", "--count", "25", "--seed", "42", "--max-degree", "8"],
            capsys,
        )
        assert code == 0
        assert report["violations"] == 0
        assert report["unresolved"] == 0

    def test_determinism(self, capsys):
        code1, r1 = run_cli(["sweep", "--count", "10", "--seed", "7", "--full"], capsys)
        code2, r2 = run_cli(["sweep", "--count", "10", "--seed", "7", "--full"], capsys)
        assert r1 == r2

    def test_bad_count(self, capsys):
        code, report = run_cli(["sweep", "--count", "0"], capsys)
        assert code == 1


class TestCertificate:
    def test_dump(self, capsys):
        code, payload = run_cli(
            ["certificate", "--poly", "x*(x-1)*(x-2)", "--graph",
             '{"edges":[[0,1],[1,2]]}'],
            capsys,
        )
        assert code == 0
        assert abs(payload["det_w"]["re"] - 2) < 1e-9
        assert len(payload["step_factors"]) == 2
        assert len(payload["row_norms"]) == 3
        assert payload["identity_rel_discrepancy"] <= 1e-10


class TestInvariants:
    def test_values(self, capsys):
        code, payload = run_cli(
            ["invariants", "--poly", "(x-1)^2*x"],
            capsys,
        )
        assert code == 0
        assert payload["r"] == 2 and payload["d"] == 3
        assert abs(payload["mahler"]["mid"] - 1) < 1e-9
        assert payload["disc_abs"]["mid"] == 0
        assert abs(payload["sdisc_abs"]["mid"] - 2) < 1e-9
        assert payload["sdisc_index"] == 1

    def test_error(self, capsys):
        code, payload = run_cli(["invariants", "--poly", "7"], capsys)
        assert code == 1
