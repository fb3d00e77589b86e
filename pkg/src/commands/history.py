"""History command: list stored verification runs."""

import sys
from typing import List, Optional

import click
from rich.console import Console
from rich.table import Table

from core.models import VerificationRun
from src.commands.common import EXIT_USAGE
from storage.database import DatabaseManager


def display_runs(runs: List[VerificationRun]) -> None:
    """Display stored runs in a formatted table.

    Args:
        runs: Stored verification runs
    """
    console = Console()
    if not runs:
        console.print("[yellow]No verification runs stored[/yellow]")
        return

    table = Table(title="Verification History")
    table.add_column("ID", justify="right", style="cyan", no_wrap=True)
    table.add_column("Claim", style="magenta")
    table.add_column("n", justify="right")
    table.add_column("k", justify="right")
    table.add_column("Verdict", style="bold")
    table.add_column("Graphs", justify="right")
    table.add_column("Mismatches", justify="right")
    table.add_column("Stored", style="dim")

    for run in runs:
        table.add_row(
            str(run.id),
            run.claim,
            "-" if run.n is None else str(run.n),
            "-" if run.k is None else str(run.k),
            run.verdict,
            str(run.graphs_examined),
            str(run.mismatch_count),
            run.created_at.strftime("%Y-%m-%d %H:%M") if run.created_at else "",
        )
    console.print(table)


@click.command(name='history')
@click.option('--store', default=None, help='Database URL (default from configuration)')
@click.option('--claim', default=None, help='Only runs of this claim')
def history_command(store: Optional[str], claim: Optional[str]) -> None:
    """List verification runs stored with `verify --store`."""
    manager = DatabaseManager(store)
    try:
        manager.create_tables()
        display_runs(manager.list_runs(claim))
    except RuntimeError as e:
        click.echo(f"ERROR: {e}", err=True)
        sys.exit(EXIT_USAGE)
    finally:
        manager.close()
