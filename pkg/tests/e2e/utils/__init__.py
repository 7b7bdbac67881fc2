"""Utilities for E2E tests."""

from .commands import run_congest_command

__all__ = ["run_congest_command"]
