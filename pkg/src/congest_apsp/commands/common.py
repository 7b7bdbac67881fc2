"""Shared plumbing for commands: graph sources, exit codes, summaries."""

from __future__ import annotations

from enum import IntEnum
from pathlib import Path
from typing import TYPE_CHECKING, Self

import typer
from pydantic import BaseModel, ValidationError, model_validator
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from congest_apsp.core.config import CongestConfig, ConfigLoadingError
from congest_apsp.core.graph import GraphError, WeightedDigraph, generate_gnp, read_graph

if TYPE_CHECKING:
    from congest_apsp.core.blocker import BlockerSet
    from congest_apsp.core.engine import RoundReport

err_console = Console(stderr=True)


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    VERIFY_FAILED = 2
    ENGINE_ABORT = 3


class GnpSpec(BaseModel):
    n: int
    p: float
    wmax: int
    directed: bool = False

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse ``gnp:n,p,wmax[,directed]``."""
        kind, _, body = text.partition(":")
        if kind != "gnp" or not body:
            raise ValueError(f"generator spec must look like gnp:n,p,wmax[,directed], got {text!r}")
        parts = body.split(",")
        if len(parts) not in (3, 4):
            raise ValueError(f"generator spec needs 3 or 4 fields, got {len(parts)}")
        directed = False
        if len(parts) == 4:
            if parts[3] not in ("directed", "undirected"):
                raise ValueError(f"orientation must be 'directed' or 'undirected', got {parts[3]!r}")
            directed = parts[3] == "directed"
        return cls(n=int(parts[0]), p=float(parts[1]), wmax=int(parts[2]), directed=directed)


class RunConfig(BaseModel):
    """Resolved command-line options shared by `run` and `verify`."""

    graph: Path | None = None
    gen: GnpSpec | None = None
    h: int | None = None
    seed: int = 0
    out: Path | None = None
    trace: Path | None = None
    audit: Path | None = None
    verify: bool = False

    @model_validator(mode="after")
    def _one_source(self) -> Self:
        if (self.graph is None) == (self.gen is None):
            raise ValueError("exactly one of --graph or --gen is required")
        return self


def load_project_config() -> CongestConfig:
    try:
        return CongestConfig.load_config()
    except ConfigLoadingError as e:
        err_console.print("[red]Error:[/red] Could not load congest.yaml.")
        raise typer.Exit(ExitCode.USAGE) from e


def build_run_config(project: CongestConfig, **options: object) -> RunConfig:
    gen = options.pop("gen", None)
    seed = options.pop("seed", None)
    try:
        return RunConfig(
            gen=GnpSpec.parse(str(gen)) if gen is not None else None,
            seed=project.seed if seed is None else seed,
            **options,
        )
    except (ValidationError, ValueError) as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.USAGE) from e


def load_graph(cfg: RunConfig, project: CongestConfig) -> WeightedDigraph:
    try:
        if cfg.graph is not None:
            return read_graph(cfg.graph, w_max=project.apsp.w_max)
        assert cfg.gen is not None
        return generate_gnp(
            cfg.gen.n,
            cfg.gen.p,
            cfg.gen.wmax,
            seed=cfg.seed,
            directed=cfg.gen.directed,
            max_retries=project.generator.max_retries,
        )
    except (GraphError, OSError, ValueError) as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.USAGE) from e


def summary_table(report: RoundReport, blockers: BlockerSet, h: int) -> Table:
    table = Table(title=f"Rounds (h={h}, |Q|={len(blockers)})")
    table.add_column("Phase", style="cyan")
    table.add_column("Rounds", justify="right", style="green")
    table.add_column("Budget", justify="right")
    table.add_column("Messages", justify="right", style="dim")
    table.add_column("Max load", justify="right")
    for part in report.parts:
        table.add_row(part.phase, str(part.rounds), str(part.budget), str(part.messages), str(part.max_load))
    table.add_row(
        "[bold]total[/bold]",
        f"[bold]{report.rounds}[/bold]",
        str(report.budget),
        str(report.messages),
        str(report.max_load),
    )
    return table
