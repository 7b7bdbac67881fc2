"""Fixtures for E2E tests."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from tests.graphs import G_A_TEXT, G_B_TEXT

if TYPE_CHECKING:
    from pathlib import Path

__all__ = ["e2e_test_dir"]


@pytest.fixture(autouse=False)
def e2e_test_dir(tmp_path: Path) -> Path:
    """Create a scratch working directory holding the G_A and G_B edge lists."""
    (tmp_path / "g_a.txt").write_text(G_A_TEXT, encoding="utf-8")
    (tmp_path / "g_b.txt").write_text(G_B_TEXT, encoding="utf-8")
    return tmp_path
