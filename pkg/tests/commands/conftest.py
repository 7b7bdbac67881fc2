from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from tests.graphs import G_A_TEXT, G_B_TEXT

if TYPE_CHECKING:
    from pathlib import Path


@pytest.fixture
def workdir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Clean cwd without congest.yaml, holding G_A and G_B edge lists."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("CONGEST_APSP_CONFIG_FILE", raising=False)
    monkeypatch.delenv("CONGEST_APSP_MAX_RETRIES", raising=False)
    (tmp_path / "g_a.txt").write_text(G_A_TEXT, encoding="utf-8")
    (tmp_path / "g_b.txt").write_text(G_B_TEXT, encoding="utf-8")
    return tmp_path
