"""`congest-apsp run`: simulate the full APSP protocol on one graph."""

from __future__ import annotations

from contextlib import ExitStack
from pathlib import Path
from typing import TYPE_CHECKING

import typer
from rich.markup import escape

from congest_apsp.core.apsp import run_apsp
from congest_apsp.core.engine import EngineError, JsonlWriter, TraceWriter
from congest_apsp.core.oracle import verify_apsp
from congest_apsp.utils.errors import ConfigError
from congest_apsp.utils.logging import log_exceptions

from .common import ExitCode, build_run_config, err_console, load_graph, load_project_config, summary_table

if TYPE_CHECKING:
    from congest_apsp.core.apsp import ApspConfig, ApspResult
    from congest_apsp.core.graph import WeightedDigraph
    from congest_apsp.core.oracle import OracleReport


def write_audit(result: ApspResult, path: Path) -> None:
    with JsonlWriter(path) as writer:
        for selection in result.blockers.selections:
            writer.write(selection.audit_record())


def print_verdict(report: OracleReport) -> None:
    failure = report.first_failure()
    if failure is None:
        err_console.print("[green]verify: PASS[/green]")
    else:
        err_console.print(f"[red]verify: FAIL ({failure.name})[/red] {escape(failure.detail)} witness={failure.witness}")


@log_exceptions(EngineError)
def simulate(
    g: WeightedDigraph,
    cfg: ApspConfig,
    tracer: TraceWriter | None = None,
) -> tuple[ApspResult, OracleReport | None]:
    """Run the protocol, with the oracle battery when ``cfg.verify`` is set."""
    if cfg.verify:
        return verify_apsp(g, cfg, on_phase=tracer)
    return run_apsp(g, cfg, on_phase=tracer), None


def run_command(
    graph: Path | None = typer.Option(None, "--graph", help="Edge-list file"),
    gen: str | None = typer.Option(None, "--gen", help="Generator spec gnp:n,p,wmax[,directed]"),
    h: int | None = typer.Option(None, "--h", help="Hop bound (default ⌈√(n·⌈log₂ n⌉)⌉)"),
    seed: int | None = typer.Option(None, "--seed", help="Generator seed (default 0)"),
    out: Path | None = typer.Option(None, "--out", help="Distance matrix TSV (default: stdout)"),
    trace: Path | None = typer.Option(None, "--trace", help="JSONL phase trace"),
    audit: Path | None = typer.Option(None, "--audit", help="JSONL blocker selection audit"),
    verify: bool = typer.Option(False, "--verify", help="Check the result against sequential oracles"),
) -> None:
    """Run the APSP protocol and write the distance matrix."""
    project = load_project_config()
    cfg = build_run_config(project, graph=graph, gen=gen, h=h, seed=seed, out=out, trace=trace, audit=audit, verify=verify)
    g = load_graph(cfg, project)

    apsp_cfg = project.apsp.model_copy(
        update={
            "h": cfg.h if cfg.h is not None else project.apsp.h,
            "trace_path": cfg.trace or project.apsp.trace_path,
            "audit_path": cfg.audit or project.apsp.audit_path,
            "verify": cfg.verify or project.apsp.verify,
        }
    )
    try:
        apsp_cfg.resolve_h(g.n)
    except ConfigError as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.USAGE) from e

    try:
        with ExitStack() as stack:
            tracer = stack.enter_context(TraceWriter(apsp_cfg.trace_path)) if apsp_cfg.trace_path else None
            result, oracle_report = simulate(g, apsp_cfg, tracer)
    except EngineError as e:
        raise typer.Exit(ExitCode.ENGINE_ABORT) from e

    tsv = result.matrix.to_tsv()
    if cfg.out is not None:
        cfg.out.write_text(tsv, encoding="utf-8")
    else:
        typer.echo(tsv, nl=False)

    if apsp_cfg.audit_path is not None:
        write_audit(result, apsp_cfg.audit_path)

    err_console.print(summary_table(result.report, result.blockers, result.h))
    err_console.print(f"Q = {result.blockers.members}")

    if oracle_report is not None:
        print_verdict(oracle_report)
        if not oracle_report.passed:
            raise typer.Exit(ExitCode.VERIFY_FAILED)
