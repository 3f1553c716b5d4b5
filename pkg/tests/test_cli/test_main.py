"""
Tests for the kahler-qm command line.
"""

import argparse
import json
from pathlib import Path

import numpy as np
import pytest

from kahler_qm.cli import main
from kahler_qm.cli.args import parse_dims
from kahler_qm.core.kahler import J_matrix

K4_OPERATOR = {"n": 2, "S": [[1.0, 0.5], [0.5, -1.0]], "A": [[0.0, 0.75], [-0.75, 0.0]]}
DATA_DIR = Path(__file__).resolve().parents[2] / "data"


def _run(capsys, argv):
    code = main(argv + ["--quiet"])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseDims:
    """Test suite for the --dims parser."""

    def test_list(self):
        """Test comma-separated integers."""
        assert parse_dims("2, 4,8") == [2, 4, 8]

    def test_empty(self):
        """Test that an empty string is an empty list."""
        assert parse_dims("") == []

    def test_rejects_garbage(self):
        """Test non-integer input."""
        with pytest.raises(argparse.ArgumentTypeError, match="comma-separated integers"):
            parse_dims("2,four")

    def test_rejects_zero(self):
        """Test non-positive dimensions."""
        with pytest.raises(argparse.ArgumentTypeError, match="positive"):
            parse_dims("0,2")


class TestVerifyCommand:
    """Test suite for `kahler-qm verify`."""

    ARGS = ["verify", "--suite", "axioms", "--dims", "1,2", "--trials", "3"]

    def test_passes(self, capsys):
        """Test exit code 0 and a passing JSON report on stdout."""
        code, out, _ = _run(capsys, self.ARGS)
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert report["suite"] == "axioms"
        assert report["dimensions"] == [1, 2]

    def test_identical_runs(self, capsys):
        """Test that repeated runs print identical bytes."""
        _, first, _ = _run(capsys, self.ARGS)
        _, second, _ = _run(capsys, self.ARGS)
        assert first == second

    def test_workers_do_not_change_output(self, capsys):
        """Test --workers 1 against --workers 4."""
        _, single, _ = _run(capsys, self.ARGS + ["--workers", "1"])
        _, threaded, _ = _run(capsys, self.ARGS + ["--workers", "4"])
        assert single == threaded

    def test_seed_is_reported(self, capsys):
        """Test that --seed reaches the report."""
        _, out, _ = _run(capsys, self.ARGS + ["--seed", "42"])
        assert json.loads(out)["seed"] == 42

    def test_out_file(self, capsys, tmp_path):
        """Test --out writes the report to a file."""
        path = tmp_path / "reports" / "axioms.json"
        code, out, _ = _run(capsys, self.ARGS + ["--out", str(path)])
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())["passed"] is True

    def test_failure_exit_code(self, capsys):
        """Test that the literal Born reading exits 1."""
        code, out, err = _run(
            capsys, ["verify", "--suite", "born", "--dims", "1", "--trials", "2", "--born-rank-divisor"]
        )
        assert code == 1
        assert json.loads(out)["passed"] is False
        assert "Verification FAILED: born" in err

    def test_all(self, capsys):
        """Test --suite all nests every suite."""
        code, out, _ = _run(capsys, ["verify", "--suite", "all", "--dims", "1,2", "--trials", "2"])
        assert code == 0
        report = json.loads(out)
        assert report["suite"] == "all"
        assert len(report["suites"]) == 7

    def test_profile_file(self, capsys, write_json):
        """Test --profile with a JSON file."""
        path = write_json("p.json", {"seed": 9, "suites": {"tensor": {"dims": [1], "trials": 2}}})
        code, out, _ = _run(capsys, ["verify", "--suite", "tensor", "--profile", str(path)])
        assert code == 0
        report = json.loads(out)
        assert (report["seed"], report["dimensions"], report["trials"]) == (9, [1], 2)

    def test_unknown_suite(self, capsys):
        """Test that argparse rejects unknown suites with exit 2."""
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--suite", "bogus"])
        assert excinfo.value.code == 2

    def test_empty_dims(self):
        """Test that verify needs at least one dimension."""
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--suite", "axioms", "--dims", ""])
        assert excinfo.value.code == 2

    def test_non_positive_tol(self):
        """Test that --tol must be positive."""
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--suite", "axioms", "--tol", "0"])
        assert excinfo.value.code == 2

    def test_unknown_profile(self, capsys):
        """Test that an unknown profile is a runtime error."""
        code, _, err = _run(capsys, ["verify", "--suite", "axioms", "--profile", "nowhere"])
        assert code == 1
        assert "ERROR" in err


class TestFileCommands:
    """Test suite for commands that read JSON inputs."""

    def test_spectral(self, capsys, write_json):
        """Test the K^4 example decomposes to -/+ kappa / 2."""
        path = write_json("op.json", K4_OPERATOR)
        code, out, _ = _run(capsys, ["spectral", "--input", str(path), "--method", "closed-form"])
        assert code == 0
        result = json.loads(out)
        assert result["method"] == "closed-form"
        assert result["eigenvalues"] == pytest.approx([-np.sqrt(7.25) / 2, np.sqrt(7.25) / 2])
        assert result["multiplicities"] == [2, 2]

    def test_spectral_complex_input(self, capsys, write_json):
        """Test that {re, im} operators are lifted."""
        path = write_json("sy.json", {"re": [[0, 0], [0, 0]], "im": [[0, -1], [1, 0]], "kind": "hermitian"})
        code, out, _ = _run(capsys, ["spectral", "--input", str(path)])
        assert code == 0
        assert json.loads(out)["eigenvalues"] == pytest.approx([-1.0, 1.0])

    def test_spectral_rejects_non_k_hermitian(self, capsys, write_json):
        """Test that structure violations exit 1."""
        path = write_json("bad.json", {"n": 1, "S": [[1.0]], "A": [[1.0]]})
        code, _, err = _run(capsys, ["spectral", "--input", str(path)])
        assert code == 1
        assert "not K-Hermitian" in err

    def test_missing_input(self, capsys, tmp_path):
        """Test that a missing file exits 2."""
        code, _, err = _run(capsys, ["spectral", "--input", str(tmp_path / "none.json")])
        assert code == 2
        assert "not found" in err

    def test_invalid_json(self, capsys, tmp_path):
        """Test that malformed JSON exits 1."""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = _run(capsys, ["spectral", "--input", str(path)])
        assert code == 1
        assert "Invalid JSON" in err

    def test_correlate(self, capsys, write_json):
        """Test <sigma_x |0>, |1>> = 1."""
        path = write_json("q.json", {
            "operators": [{"re": [[0, 1], [1, 0]], "kind": "hermitian"}],
            "psi": {"re": [1, 0]},
            "phi": {"re": [0, 1]},
        })
        code, out, _ = _run(capsys, ["correlate", "--query", str(path)])
        assert code == 0
        assert json.loads(out)["value"] == {"re": 1.0, "im": 0.0}

    def test_measure(self, capsys, write_json):
        """Test sigma_z on 0.6|0> + 0.8|1>."""
        state = write_json("plus.json", {"n": 2, "q": [0.6, 0.8], "p": [0.0, 0.0]})
        op = write_json("z.json", {"re": [[1, 0], [0, -1]], "kind": "hermitian"})
        code, out, _ = _run(capsys, ["measure", "--state", str(state), "--operator", str(op)])
        assert code == 0
        result = json.loads(out)
        assert result["rank_divisor"] is False
        assert [o["probability"] for o in result["outcomes"]] == pytest.approx([0.64, 0.36])

    def test_measure_rank_divisor(self, capsys, write_json):
        """Test --born-rank-divisor halves qubit probabilities."""
        state = write_json("zero.json", {"re": [1, 0]})
        op = write_json("z.json", {"re": [[1, 0], [0, -1]], "kind": "hermitian"})
        code, out, _ = _run(
            capsys, ["measure", "--state", str(state), "--operator", str(op), "--born-rank-divisor"]
        )
        assert code == 0
        assert [o["probability"] for o in json.loads(out)["outcomes"]] == pytest.approx([0.0, 0.5])

    def test_group_check(self, capsys, write_json):
        """Test J is in all four groups."""
        path = write_json("J.json", {"matrix": J_matrix(2).tolist()})
        code, out, _ = _run(capsys, ["group", "check", "--input", str(path)])
        assert code == 0
        result = json.loads(out)
        assert result["memberships"] == ["j_commuting", "kahler_unitary", "orthogonal", "symplectic"]

    def test_group_check_counterexample(self, capsys, write_json):
        """Test diag(1, -1) is orthogonal only."""
        path = write_json("m.json", [[1.0, 0.0], [0.0, -1.0]])
        code, out, _ = _run(capsys, ["group", "check", "--input", str(path)])
        assert code == 0
        assert json.loads(out)["memberships"] == ["orthogonal"]


class TestShippedExamples:
    """Test suite for the example inputs in data/."""

    def test_spectral_operator_k4(self, capsys):
        """Test the shipped K^4 operator with both the closed form and the structured solver."""
        path = str(DATA_DIR / "operator_k4.json")
        code, out, _ = _run(capsys, ["spectral", "--input", path, "--method", "closed-form"])
        assert code == 0
        closed = json.loads(out)
        code, out, _ = _run(capsys, ["spectral", "--input", path, "--method", "structured"])
        assert code == 0
        structured = json.loads(out)
        assert closed["eigenvalues"] == pytest.approx([-np.sqrt(7.25) / 2, np.sqrt(7.25) / 2])
        assert closed["eigenvalues"] == pytest.approx(structured["eigenvalues"])

    def test_measure_state_plus(self, capsys):
        """Test sigma_z on |+> splits evenly."""
        code, out, _ = _run(capsys, [
            "measure", "--state", str(DATA_DIR / "state_plus.json"),
            "--operator", str(DATA_DIR / "sigma_z.json"),
        ])
        assert code == 0
        result = json.loads(out)
        assert [o["eigenvalue"] for o in result["outcomes"]] == pytest.approx([-1.0, 1.0])
        assert [o["probability"] for o in result["outcomes"]] == pytest.approx([0.5, 0.5])

    def test_correlate_sigma_x(self, capsys):
        """Test the shipped correlation query."""
        code, out, _ = _run(capsys, ["correlate", "--query", str(DATA_DIR / "correlation_sigma_x.json")])
        assert code == 0
        assert json.loads(out)["value"] == {"re": 1.0, "im": 0.0}

    def test_group_check_matrix_j(self, capsys):
        """Test the shipped J matrix lies in every group."""
        code, out, _ = _run(capsys, ["group", "check", "--input", str(DATA_DIR / "matrix_J.json")])
        assert code == 0
        assert json.loads(out)["memberships"] == ["j_commuting", "kahler_unitary", "orthogonal", "symplectic"]


class TestOtherCommands:
    """Test suite for simulate, bench and the listings."""

    def test_simulate_bell(self, capsys):
        """Test that only 00 and 11 are sampled."""
        code, out, _ = _run(capsys, ["simulate", "bell", "--shots", "500", "--seed", "3"])
        assert code == 0
        result = json.loads(out)
        assert result["counts"]["01"] == 0
        assert result["counts"]["10"] == 0
        assert result["counts"]["00"] + result["counts"]["11"] == 500

    def test_simulate_is_seeded(self, capsys):
        """Test identical output for identical seeds."""
        _, first, _ = _run(capsys, ["simulate", "bell", "--shots", "100", "--seed", "5"])
        _, second, _ = _run(capsys, ["simulate", "bell", "--shots", "100", "--seed", "5"])
        assert first == second

    def test_bench(self, capsys):
        """Test one record per dimension and method."""
        code, out, _ = _run(capsys, ["bench", "--dims", "1,2", "--trials", "1"])
        assert code == 0
        records = json.loads(out)
        assert [(r["n"], r["method"]) for r in records] == [
            (1, "structured"), (1, "dense"), (2, "structured"), (2, "dense"),
        ]

    def test_bench_empty_dims(self, capsys):
        """Test that no dimensions print an empty list."""
        code, out, _ = _run(capsys, ["bench", "--dims", ""])
        assert code == 0
        assert json.loads(out) == []

    def test_list_suites(self, capsys):
        """Test the suite listing."""
        code, out, _ = _run(capsys, ["list-suites"])
        assert code == 0
        info = json.loads(out)
        assert "class" not in info["axioms"]
        assert info["groups"]["trials"] == 100

    def test_list_profiles(self, capsys):
        """Test the profile listing with usage on stderr."""
        code, out, err = _run(capsys, ["list-profiles"])
        assert code == 0
        assert json.loads(out)["acceptance"] == "built-in"
        assert "Usage" in err

    def test_progress_goes_to_stderr(self, capsys):
        """Test that progress never pollutes stdout."""
        code = main(["simulate", "bell", "--shots", "10"])
        captured = capsys.readouterr()
        assert code == 0
        json.loads(captured.out)
        assert "Sampling 10 shots" in captured.err
