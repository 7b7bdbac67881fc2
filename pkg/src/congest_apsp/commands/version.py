"""`congest-apsp version`."""

from __future__ import annotations

import platform
from importlib.metadata import PackageNotFoundError, version

from rich.console import Console

from congest_apsp import __version__

console = Console()

_STACK = ("networkx", "pydantic", "typer")


def _installed(package: str) -> str:
    try:
        return version(package)
    except PackageNotFoundError:
        return "not installed"


def version_command() -> None:
    """Print the congest-apsp version and the versions it runs on."""
    console.print(f"[bold]congest-apsp: v{__version__}[/bold]")
    stack = ", ".join(f"{name} {_installed(name)}" for name in _STACK)
    console.print(f"[dim]Python {platform.python_version()}; {stack}[/dim]")
