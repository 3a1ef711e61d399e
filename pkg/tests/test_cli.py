from __future__ import annotations

import csv
import json
import sys

import pytest
from click.testing import CliRunner
from conftest import CIRCLE_THETA, ELLIPSE_Q
from mpmath import mpf

from poncelet_ratio.commands import cli, main
from poncelet_ratio.services import oracle


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _report(output: str) -> dict:
    report, _ = json.JSONDecoder().raw_decode(output[output.index("{") :])
    return report


def test_theta_json_report(runner):
    result = runner.invoke(cli, ["theta", "--c", "0.5", "--r", "0.2", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result.output)
    assert report["command"] == "theta"
    assert report["inputs"] == {"c": "0.5", "r": "0.2"}
    assert abs(mpf(report["theta"]) - mpf(CIRCLE_THETA)) < mpf(10) ** -22
    assert [row["q"] for row in report["convergents"][:10]] == [
        2, 5, 7, 12, 31, 43, 74, 117, 191, 308,
    ]  # fmt: skip
    assert report["stages"]["working_digits"] == 64
    assert "results" not in report
    assert json.dumps(report, indent=2) == result.output.strip()


def test_theta_text_report(runner):
    result = runner.invoke(cli, ["theta", "--c", "0.5", "--r", "0.2"])
    assert result.exit_code == 0
    assert "theta        = 0.4188339853" in result.output
    assert "elapsed:" in result.output


def test_closed_triangle_reports_a_fraction(runner):
    result = runner.invoke(cli, ["theta", "--c", "0.2", "--r", "0.48", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result.output)
    assert report["theta"] == "1/3"
    assert report["results"]["closure_index"] == 3


def test_pair_outside_the_circle_exits_with_domain_status(runner):
    result = runner.invoke(cli, ["theta", "--c", "0.6", "--r", "0.5"])
    assert result.exit_code == 2
    assert "Error:" in result.output


def test_theta_needs_a_pair_or_an_integral(runner):
    result = runner.invoke(cli, ["theta"])
    assert result.exit_code == 2
    assert "Supply --c and --r" in result.output


def test_theta_oracle_disagreement_exits_with_precision_status(runner, monkeypatch):
    monkeypatch.setattr(oracle, "circle_theta", lambda *_: mpf("0.5"))
    args = ["theta", "--c", "0.5", "--r", "0.2", "--verify", "--json"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 3
    report = _report(result.output)
    assert report["agreement_digits"] == 0
    assert report["results"]["oracle_agrees"] is False


def test_incomplete_integral_with_oracle(runner):
    args = ["theta", "--psi", "0.7", "--k2", "0.5", "--digits", "20", "--verify", "--json"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    report = _report(result.output)
    assert report["agreement_digits"] >= 18
    assert report["results"]["oracle_agrees"] is True
    assert abs(mpf(report["results"]["F"]) - mpf(report["results"]["oracle_F"])) < mpf(10) ** -17


def test_ellipse_records(runner):
    args = ["ellipse", "--a", "0.5", "--b", "0.4", "--c", "0.4", "--records", "5", "--json"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    report = _report(result.output)
    assert [row["q"] for row in report["convergents"]] == ELLIPSE_Q[:5]
    assert report["results"]["estimate"] == "47/151"


def test_nr_writes_a_trace(runner, tmp_path):
    trace = tmp_path / "trace.csv"
    args = [
        "nr", "--a", "0.6", "--b1", "0.4", "--b2", "0.4",
        "--budget", "200", "--trace", str(trace), "--json",
    ]  # fmt: skip
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    report = _report(result.output)
    assert report["verdict"]["kind"] == "regular"
    assert report["stages"] == {"steps": 200, "fast_path": False}

    with trace.open(newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["k", "cos_psi", "sin_psi", "lambda_sq", "log_h"]
    assert len(rows) == 201
    assert rows[-1][0] == "200"


def test_nr_rejects_a_vertex_off_the_circle(runner):
    args = ["nr", "--a", "0.6", "--b1", "0.4", "--b2", "0.4", "--z0", "0.5,0.5"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert "not on the unit circle" in result.output


def test_verify_pair(runner):
    args = ["verify", "--pair", "0.5,0.2", "--digits", "30", "--json"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    report = _report(result.output)
    assert report["results"]["failures"] == 0
    assert report["agreement_digits"] >= 28
    assert report["results"]["cases"][0]["c"] == "0.5"


def test_config_file_supplies_flag_defaults(runner, tmp_path):
    config = tmp_path / "run.env"
    config.write_text("DIGITS=30\n")
    args = ["--config", str(config), "theta", "--c", "0.5", "--r", "0.2", "--json"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    report = _report(result.output)
    assert report["inputs"]["digits"] == 30


@pytest.mark.parametrize(
    ("argv", "status"),
    [
        (["theta", "--c", "0.5", "--r", "0.2"], 0),
        (["theta", "--c", "0.6", "--r", "0.5"], 2),
        (["nowhere"], 2),
    ],
)
def test_main_exit_status(monkeypatch, capsys, argv, status):
    monkeypatch.setattr(sys, "argv", ["poncelet-ratio", *argv])
    assert main() == status
    capsys.readouterr()
