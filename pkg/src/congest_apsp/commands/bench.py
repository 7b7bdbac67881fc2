"""`congest-apsp bench`: round-count scaling over a sequence of n."""

from __future__ import annotations

import csv
import io
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from pathlib import Path

import typer
from pydantic import BaseModel
from rich.markup import escape
from rich.table import Table

from congest_apsp.core.apsp import ApspConfig, round_budget, run_apsp
from congest_apsp.core.engine import EngineError
from congest_apsp.core.graph import GraphError, generate_gnp

from .common import ExitCode, err_console, load_project_config


class BenchRow(BaseModel):
    n: int
    seed: int
    h: int
    rounds_total: int
    rounds_step1: int
    rounds_blocker: int
    rounds_sssp: int
    rounds_bcast: int
    Q_size: int

    @property
    def budget(self) -> int:
        return round_budget(self.n, self.h, self.Q_size)


class BenchCase(BaseModel):
    n: int
    seed: int
    p: float
    wmax: int | None
    directed: bool
    max_retries: int


def bench_one(case: BenchCase) -> BenchRow:
    g = generate_gnp(
        case.n,
        case.p,
        case.wmax if case.wmax is not None else case.n * case.n,
        seed=case.seed,
        directed=case.directed,
        max_retries=case.max_retries,
    )
    result = run_apsp(g, ApspConfig())
    report = result.report
    return BenchRow(
        n=case.n,
        seed=case.seed,
        h=result.h,
        rounds_total=report.rounds,
        rounds_step1=report.part("hhop_trees").rounds,
        rounds_blocker=report.part("compute_blocker").rounds,
        rounds_sssp=report.part("blocker_sssp").rounds,
        rounds_bcast=report.part("blocker_broadcast").rounds,
        Q_size=len(result.blockers),
    )


def budget_constant(n: int, budget: float) -> float:
    """budget / (n^{3/2}·√⌈log₂ n⌉)."""
    return budget / (n**1.5 * math.sqrt(max(1, math.ceil(math.log2(n)))))


def growth_exponent(rows: list[BenchRow]) -> float | None:
    """Least-squares slope of log(mean rounds_total) against log(n)."""
    by_n: dict[int, list[int]] = {}
    for row in rows:
        by_n.setdefault(row.n, []).append(row.rounds_total)
    if len(by_n) < 2:
        return None
    xs = [math.log(n) for n in sorted(by_n)]
    ys = [math.log(statistics.fmean(by_n[n])) for n in sorted(by_n)]
    return statistics.linear_regression(xs, ys).slope


def rows_to_csv(rows: list[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(BenchRow.model_fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.model_dump())
    return buffer.getvalue()


def scaling_table(rows: list[BenchRow]) -> Table:
    table = Table(title="Scaling")
    table.add_column("n", justify="right", style="cyan")
    table.add_column("runs", justify="right")
    table.add_column("mean rounds", justify="right", style="green")
    table.add_column("mean budget", justify="right")
    table.add_column("C", justify="right", style="magenta")
    for n in sorted({row.n for row in rows}):
        group = [row for row in rows if row.n == n]
        mean_rounds = statistics.fmean(row.rounds_total for row in group)
        mean_budget = statistics.fmean(row.budget for row in group)
        table.add_row(str(n), str(len(group)), f"{mean_rounds:.0f}", f"{mean_budget:.0f}", f"{budget_constant(n, mean_budget):.2f}")
    return table


def bench_command(
    ns: list[int] = typer.Option([], "--n", help="Node counts (repeatable)"),
    seeds: str = typer.Option("0", "--seeds", help="Comma-separated seeds"),
    p: float | None = typer.Option(None, "--p", help="Edge probability (default from congest.yaml, 0.3)"),
    wmax: int | None = typer.Option(None, "--wmax", help="Maximum edge weight (default n²)"),
    directed: bool = typer.Option(False, "--directed", help="Directed graphs"),
    jobs: int = typer.Option(1, "--jobs", "-j", help="Parallel worker processes"),
    out: Path | None = typer.Option(None, "--out", help="CSV file (default: stdout)"),
) -> None:
    """Run the protocol for every (n, seed) and emit a CSV of round counts."""
    project = load_project_config()
    try:
        seed_list = [int(s) for s in seeds.split(",") if s.strip()]
    except ValueError as e:
        err_console.print(f"[red]Error:[/red] seeds must be comma-separated integers, got {seeds!r}")
        raise typer.Exit(ExitCode.USAGE) from e

    cases = [
        BenchCase(
            n=n,
            seed=seed,
            p=p if p is not None else project.generator.p,
            wmax=wmax if wmax is not None else project.generator.wmax,
            directed=directed or project.generator.directed,
            max_retries=project.generator.max_retries,
        )
        for n, seed in product(ns, seed_list)
    ]

    try:
        if jobs > 1 and len(cases) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                rows = list(pool.map(bench_one, cases))
        else:
            rows = [bench_one(case) for case in cases]
    except (GraphError, ValueError) as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.USAGE) from e
    except EngineError as e:
        err_console.print(f"[red]Engine error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.ENGINE_ABORT) from e

    rows.sort(key=lambda row: (row.n, row.seed))
    text = rows_to_csv(rows)
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")

    if rows:
        err_console.print(scaling_table(rows))
        slope = growth_exponent(rows)
        if slope is not None:
            err_console.print(f"log-log slope of rounds_total: {slope:.3f}")
