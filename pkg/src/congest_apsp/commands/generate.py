"""`congest-apsp gen`: write a seeded G(n, p) graph in edge-list format."""

from __future__ import annotations

from pathlib import Path

import typer
from rich.markup import escape

from congest_apsp.core.graph import GraphError, generate_gnp, serialize_graph

from .common import ExitCode, err_console, load_project_config


def generate_command(
    n: int = typer.Option(..., "--n", help="Node count"),
    p: float | None = typer.Option(None, "--p", help="Edge probability (default from congest.yaml, 0.3)"),
    wmax: int | None = typer.Option(None, "--wmax", help="Maximum edge weight (default n²)"),
    seed: int | None = typer.Option(None, "--seed", help="Generator seed (default 0)"),
    directed: bool = typer.Option(False, "--directed", help="Generate a directed graph"),
    out: Path | None = typer.Option(None, "--out", help="Output file (default: stdout)"),
) -> None:
    """Generate a connected random graph."""
    project = load_project_config()
    generator = project.generator
    try:
        g = generate_gnp(
            n,
            p if p is not None else generator.p,
            wmax if wmax is not None else generator.resolve_wmax(n),
            seed=project.seed if seed is None else seed,
            directed=directed or generator.directed,
            max_retries=generator.max_retries,
        )
    except (GraphError, ValueError) as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.USAGE) from e

    text = serialize_graph(g)
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
        err_console.print(f"[green]Wrote {g.n} nodes, {g.m} edges to {out}[/green]")
