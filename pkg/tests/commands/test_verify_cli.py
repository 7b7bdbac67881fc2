"""Direct-call tests for `congest-apsp verify`."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
import typer

from congest_apsp.commands.common import ExitCode
from congest_apsp.commands.run import simulate
from congest_apsp.commands.verify import verify_command
from congest_apsp.core.oracle import CheckResult, OracleReport


def test_g_a_passes(workdir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """All checks pass and the JSON report lists them."""
    verify_command(graph=workdir / "g_a.txt", gen=None, h=1, seed=None, json_path=workdir / "report.json")
    assert "verify: PASS" in capsys.readouterr().err
    report = json.loads((workdir / "report.json").read_text())
    assert all(check["passed"] for check in report["checks"])


def test_generated_graph(workdir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """--gen works the same as --graph."""
    verify_command(graph=None, gen="gnp:10,0.4,20,directed", h=None, seed=5, json_path=None)
    assert "Oracle checks" in capsys.readouterr().err


def test_failure_exit_code(workdir: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    """A failing check exits with 2 and names the check."""

    def failing(*args, **kwargs):  # type: ignore[no-untyped-def]
        result, report = simulate(*args, **kwargs)
        broken = OracleReport(checks=[*report.checks, CheckResult.fail("apsp", [1, 3], "forced")])
        return result, broken

    monkeypatch.setattr("congest_apsp.commands.verify.simulate", failing)
    with pytest.raises(typer.Exit) as info:
        verify_command(graph=workdir / "g_a.txt", gen=None, h=None, seed=None, json_path=None)
    assert info.value.exit_code == ExitCode.VERIFY_FAILED
    assert "verify: FAIL (apsp)" in capsys.readouterr().err
