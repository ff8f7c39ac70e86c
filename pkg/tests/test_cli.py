"""Command line behavior: exit codes, report formats, determinism."""

import json

import pytest

from su21_invariants import cli, suites
from su21_invariants.report import CheckResult, VerificationReport


def test_verify_passing_suite_exits_zero(capsys):
    assert cli.main(["verify", "sigma-tau"]) == 0
    out = capsys.readouterr().out
    assert "10/10 checks passed" in out
    assert "FAIL" not in out


def test_verify_json_format(capsys):
    assert cli.main(["verify", "reduction", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload) == ["suite", "config", "checks"]
    assert payload["suite"] == "reduction"
    assert len(payload["checks"]) == 6
    assert all(c["status"] == "pass" for c in payload["checks"])
    assert all(list(c)[:3] == ["id", "anchor", "status"] for c in payload["checks"])


def test_verify_reports_are_byte_identical():
    first = suites.run_suite("abelian").to_json()
    second = suites.run_suite("abelian").to_json()
    assert first == second
    t1 = suites.run_suite("lie").to_text()
    t2 = suites.run_suite("lie").to_text()
    assert t1 == t2


def test_verify_failure_exits_nonzero(monkeypatch, capsys):
    failing = VerificationReport(
        "lie", {}, [CheckResult("stub", "forced failure", False, "residual text")]
    )
    monkeypatch.setattr(cli.suites, "run_suite", lambda *a, **k: failing)
    assert cli.main(["verify", "lie"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "residual text" in out


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = cli.main(
        ["verify", "dk", "--format", "json", "--out", str(target)]
    )
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["suite"] == "dk"
    assert "report written" in capsys.readouterr().out


def test_verify_bounds_are_configurable(capsys):
    assert cli.main(["verify", "table", "--max-degree", "3"]) == 0
    out = capsys.readouterr().out
    assert "degree-3" in out and "degree-4" not in out


def test_unknown_suite_is_a_usage_error():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "frobnicate"])
    assert err.value.code == 2


def test_invalid_bounds_are_errors(capsys):
    assert cli.main(["verify", "table", "--max-degree", "-1"]) == 2
    assert "nonnegative" in capsys.readouterr().err
    with pytest.raises(ValueError):
        suites.run_suite("uc-basis", max_filtration=-2)


def test_eval_command(capsys):
    assert cli.main(["eval", "--context", "symmetric", "H^2+4*E*F"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "H1^2 - 2*H1*H2 + H2^2 + 4*E*F"


def test_eval_parse_error_exit_code(capsys):
    assert cli.main(["eval", "--context", "symmetric", "H^^2"]) == 2
    assert "position" in capsys.readouterr().err


def test_mul_command(capsys):
    assert cli.main(["mul", "--context", "clifford", "E1", "F1"]) == 0
    assert capsys.readouterr().out.strip() == "E1*F1"
    assert cli.main(["mul", "--context", "enveloping", "F", "E"]) == 0
    assert capsys.readouterr().out.strip() == "E*F - H1 + H2"


def test_run_suite_all_merges_everything():
    rep = suites.run_suite("all", max_degree=2, max_filtration=2)
    assert rep.suite == "all"
    assert rep.passed
    ids = [c.check_id for c in rep.checks]
    assert any(i.startswith("lie:") for i in ids)
    assert any(i.startswith("uc-basis:") for i in ids)
    assert any(i.startswith("ideal-slice:") for i in ids)


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        suites.run_suite("nope")
