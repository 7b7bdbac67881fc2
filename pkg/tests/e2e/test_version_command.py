"""End-to-end tests for `congest-apsp version`."""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

import pytest

from .utils import run_congest_command

if TYPE_CHECKING:
    from pathlib import Path


@pytest.mark.parametrize("args", [["version"], ["--version"], ["-v"]])
def test_version_output(e2e_test_dir: Path, args: list[str]) -> None:
    """Every spelling of the version query prints the name and a semantic version."""
    result = run_congest_command(["congest-apsp", *args], cwd=e2e_test_dir)

    assert result.returncode == 0, f"Version should succeed. Stderr: {result.stderr}"
    assert not result.stderr, f"Should not have errors. Got stderr: {result.stderr}"
    assert "congest-apsp" in result.stdout.lower(), f"Should name the tool. Got: {result.stdout}"
    assert re.search(r"v?\d+\.\d+\.\d+", result.stdout), f"Should show a version number. Got: {result.stdout}"


def test_no_args_shows_help(e2e_test_dir: Path) -> None:
    """Without a subcommand the help text lists every command."""
    result = run_congest_command(["congest-apsp"], cwd=e2e_test_dir)

    assert result.returncode == 0, f"Command should succeed. Stderr: {result.stderr}"
    for command in ("run", "gen", "bench", "verify"):
        assert command in result.stdout, f"Should mention {command}. Got: {result.stdout}"
