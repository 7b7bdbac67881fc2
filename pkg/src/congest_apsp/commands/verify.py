"""`congest-apsp verify`: run the oracle battery on one graph."""

from __future__ import annotations

from pathlib import Path

import typer
from rich.markup import escape
from rich.table import Table

from congest_apsp.core.engine import EngineError
from congest_apsp.core.oracle import OracleReport
from congest_apsp.utils.errors import ConfigError

from .common import ExitCode, build_run_config, err_console, load_graph, load_project_config
from .run import print_verdict, simulate


def report_table(report: OracleReport) -> Table:
    table = Table(title="Oracle checks")
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Witness", style="dim")
    table.add_column("Detail")
    for check in report.checks:
        verdict = "[green]PASS[/green]" if check.passed else "[red]FAIL[/red]"
        witness = " ".join(map(str, check.witness)) if check.witness else ""
        table.add_row(check.name, verdict, witness, escape(check.detail))
    return table


def verify_command(
    graph: Path | None = typer.Option(None, "--graph", help="Edge-list file"),
    gen: str | None = typer.Option(None, "--gen", help="Generator spec gnp:n,p,wmax[,directed]"),
    h: int | None = typer.Option(None, "--h", help="Hop bound"),
    seed: int | None = typer.Option(None, "--seed", help="Generator seed (default 0)"),
    json_path: Path | None = typer.Option(None, "--json", help="Write the oracle report as JSON"),
) -> None:
    """Simulate once and compare everything against sequential ground truth."""
    project = load_project_config()
    cfg = build_run_config(project, graph=graph, gen=gen, h=h, seed=seed, verify=True)
    g = load_graph(cfg, project)
    apsp_cfg = project.apsp.model_copy(update={"h": cfg.h if cfg.h is not None else project.apsp.h, "verify": True})

    try:
        apsp_cfg.resolve_h(g.n)
        _, report = simulate(g, apsp_cfg)
    except ConfigError as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.USAGE) from e
    except EngineError as e:
        raise typer.Exit(ExitCode.ENGINE_ABORT) from e

    assert report is not None
    err_console.print(report_table(report))
    if json_path is not None:
        json_path.write_text(report.model_dump_json(indent=2), encoding="utf-8")

    print_verdict(report)
    if not report.passed:
        raise typer.Exit(ExitCode.VERIFY_FAILED)
