"""Main CLI application for congest-apsp."""

import typer
from rich.console import Console

from . import __version__
from .commands.bench import bench_command
from .commands.generate import generate_command
from .commands.run import run_command
from .commands.verify import verify_command
from .commands.version import version_command

console = Console()
app = typer.Typer(
    name="congest-apsp",
    help="CONGEST-model simulator for deterministic exact weighted APSP",
    add_completion=False,
    pretty_exceptions_show_locals=False,
)


def version_callback(value: bool) -> None:
    """Show version information."""
    if value:
        console.print(f"congest-apsp v{__version__}")
        console.print("Round-synchronous CONGEST simulation of blocker-set APSP")
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool | None = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version information",
    ),
) -> None:
    """
    congest-apsp: exact weighted all-pairs shortest paths in the CONGEST model.

    Builds h-hop trees, a deterministic blocker set, and combines per-blocker
    distances, with every message checked against the one-message-per-link rule.
    """
    if ctx.invoked_subcommand is None:
        console.print(ctx.get_help())


def register_commands() -> None:
    """Register CLI commands."""
    app.command("run", help="Run the APSP protocol on a graph")(run_command)
    app.command("gen", help="Generate a seeded random graph")(generate_command)
    app.command("bench", help="Measure round counts over a sequence of n")(bench_command)
    app.command("verify", help="Check a run against sequential oracles")(verify_command)
    app.command("version", help="Show version")(version_command)


register_commands()


if __name__ == "__main__":
    app()
