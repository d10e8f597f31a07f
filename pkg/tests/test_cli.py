import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args):
    env = dict(os.environ, PYTHONPATH=SRC)
    return subprocess.run(
        [sys.executable, "-m", "niemytzki.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


class TestExitCodes:
    def test_success(self):
        assert run_cli("member", "--set", "cantor", "--point", "1/4").returncode == 0

    def test_usage_error(self):
        assert run_cli("member", "--set", "cantor").returncode == 1
        assert run_cli("nonsense").returncode == 1
        assert run_cli("member", "--set", "cantor", "--point", "1/4,1/2").returncode == 1

    def test_parse_error(self):
        proc = run_cli("classify", "--set", "cantor |")
        assert proc.returncode == 2
        assert "parse error" in proc.stderr

    def test_verification_failure_exit_is_reserved(self):
        # shipped suites pass; exit 3 is reachable only through a failure
        proc = run_cli("check", "--suite", "S7", "--samples", "40")
        assert proc.returncode == 0

    def test_verification_failure_maps_to_exit_3(self, monkeypatch, capsys):
        from niemytzki import cli
        from niemytzki.harness import Failure, SuiteResult

        def broken(cfg):
            result = SuiteResult(suite="S1", dimension=2, samples=1, seed=0)
            result.checks = 1
            result.failures.append(Failure(0, "synthetic", {}))
            return result

        monkeypatch.setattr(cli, "run_suite", broken)
        code = cli.main(["check", "--suite", "S1", "--samples", "1", "--json"])
        assert code == 3
        assert json.loads(capsys.readouterr().out)["ok"] is False

    def test_undecidable_abort(self):
        proc = run_cli(
            "nbhd", "--topology", "bernstein", "--point", "0,0", "--eps", "1"
        )
        assert proc.returncode == 4
        assert "undecidable" in proc.stderr

    def test_help_exits_zero(self):
        assert run_cli("--help").returncode == 0


class TestCommands:
    def test_classify_bernstein(self):
        proc = run_cli("classify", "--dimension", "3", "--set", "bernstein", "--json")
        data = json.loads(proc.stdout)
        assert data["properties"]["lindelof"] == "true"
        assert data["properties"]["perfect"] == "false"
        assert data["dimension"] == 3

    def test_member_cantor(self):
        proc = run_cli("member", "--dimension", "2", "--set", "cantor",
                       "--point", "1/4", "--json")
        assert json.loads(proc.stdout)["membership"] == "in"

    def test_member_human_output(self):
        proc = run_cli("member", "--set", "cantor", "--point", "1/2")
        assert proc.stdout.strip() == "out"

    def test_nbhd(self):
        proc = run_cli("nbhd", "--topology", "niemytzki", "--point", "0,0",
                       "--eps", "1", "--json")
        data = json.loads(proc.stdout)
        assert data["neighborhood"]["kind"] == "tangent-ball"
        proc = run_cli("nbhd", "--topology", "euclidean", "--point", "0,0",
                       "--eps", "1", "--json")
        assert json.loads(proc.stdout)["neighborhood"]["kind"] == "half-ball"

    def test_converge_tangent_circle(self):
        proc = run_cli("converge", "--dimension", "2", "--family",
                       "tangent-circle((0);1)", "--topology", "niemytzki", "--json")
        data = json.loads(proc.stdout)
        assert data["converges"] is False
        kinds = [c["kind"] for c in data["certificates"]]
        assert "blocking-neighborhood" in kinds

    def test_converge_vertical_euclidean(self):
        proc = run_cli("converge", "--family", "vertical((0);1)",
                       "--topology", "euclidean", "--json")
        assert json.loads(proc.stdout)["converges"] is True

    def test_compare(self):
        proc = run_cli("compare", "--set-a", "empty", "--set-b", "all", "--json")
        assert json.loads(proc.stdout)["relation"] == "finer"

    def test_check_json(self):
        proc = run_cli("check", "--suite", "S1", "--samples", "50", "--json")
        data = json.loads(proc.stdout)
        assert data["ok"] is True
        assert data["failures"] == []

    def test_explain(self):
        proc = run_cli("explain", "--set", "bernstein", "--property", "lindelof",
                       "--json")
        data = json.loads(proc.stdout)
        assert data["verdict"] == "true"
        assert any(s["rule"] == "R4" for s in data["trace"])

    def test_explain_unknown_property(self):
        assert run_cli("explain", "--set", "cantor",
                       "--property", "frobnication").returncode == 1

    def test_modified_topology_expression(self):
        proc = run_cli("nbhd", "--topology", "rationals", "--point", "1/2,0",
                       "--eps", "2", "--json")
        assert json.loads(proc.stdout)["neighborhood"]["kind"] == "half-ball"


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("classify", "--dimension", "2", "--set", "bernstein", "--json"),
            ("member", "--set", "cantor", "--point", "1/4", "--json"),
            ("compare", "--set-a", "empty", "--set-b", "all", "--json"),
            ("check", "--suite", "S4", "--samples", "40", "--seed", "42", "--json"),
        ],
    )
    def test_byte_identical_json(self, args):
        first, second = run_cli(*args), run_cli(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode
