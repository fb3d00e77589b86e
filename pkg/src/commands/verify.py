"""Verify command: run claim checks and emit JSON reports."""

import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click
from rich.console import Console
from rich.table import Table

from core.config import Config
from core.graph import GraphError
from core.logging import log_verification_event
from core.verify import CLAIMS, exit_code, recheck_witnesses, run_claims, VerificationReport
from src.commands.common import EXIT_USAGE, cap_option, endpoints_option, lenient_option, read_input_graphs
from storage.database import DatabaseManager
from utils.graph6_stream import Graph6StreamError
from utils.report_writer import load_reports, render_reports, write_reports

VERDICT_STYLES = {'pass': 'green', 'fail': 'red', 'discrepancy-noted': 'yellow'}


def display_report_summary(reports: List[Dict[str, Any]]) -> None:
    """Render one table row per report."""
    console = Console()
    table = Table(title="Verification Reports")
    table.add_column("claim", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("k", justify="right")
    table.add_column("graphs", justify="right")
    table.add_column("witnesses", justify="right")
    table.add_column("mismatches", justify="right")
    table.add_column("verdict")
    table.add_column("seconds", justify="right")

    for report in reports:
        style = VERDICT_STYLES[report['verdict']]
        table.add_row(
            report['claim'],
            _cell(report['params']['n']),
            _cell(report['params']['k']),
            str(report['graphs_examined']),
            str(len(report['witnesses'])),
            str(len(report['mismatches'])),
            f"[{style}]{report['verdict']}[/{style}]",
            f"{report['elapsed_s']:.2f}",
        )
    console.print(table)


def _cell(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def recheck_report_file(path: Path) -> int:
    """Re-verify the witnesses of a stored report file; returns the exit code."""
    problems = []
    for report in load_reports(path):
        problems.extend(f"{report['claim']}: {problem}" for problem in recheck_witnesses(report))
    for problem in problems:
        click.echo(problem)
    if problems:
        return 2
    click.echo("All witnesses re-checked")
    return 0


@click.command(name='verify')
@click.option('--max-n', type=click.IntRange(min=1), default=Config.ENUMERATION_CAP,
              help='Largest order to check (above 8 only with --input)')
@click.option('--k', 'ks', type=click.IntRange(1, 4), multiple=True,
              help='Cactus class to check (repeatable, default 1-4)')
@click.option('--claim', 'claims', type=click.Choice(CLAIMS), multiple=True,
              help='Claim to check (repeatable, default all)')
@click.option('--k-max', type=click.IntRange(min=1), default=6,
              help='Largest k for the 2-connected bound check')
@click.option('--input', 'input_file', type=click.File('r'), default=None,
              help='External graph6 stream used instead of internal enumeration')
@click.option('--output', 'output_path', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='Write the JSON reports to this file')
@click.option('--format', 'output_format', type=click.Choice(['json', 'table']), default='json',
              help='Standard output format')
@click.option('--jobs', type=click.IntRange(min=1), default=1,
              help='Worker processes for per-graph cycle counting')
@click.option('--no-timing', is_flag=True, help='Write elapsed_s as 0 for byte-stable reports')
@click.option('--store', is_flag=False, flag_value='default', default=None,
              help='Also store reports in a database (optional URL)')
@click.option('--log/--no-log', 'write_log', default=True, help='Append events to the verification log')
@click.option('--recheck', 'recheck_path', type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help='Re-verify witnesses of an existing report file and exit')
@cap_option
@endpoints_option
@lenient_option
def verify_command(
    max_n: int,
    ks: Tuple[int, ...],
    claims: Tuple[str, ...],
    k_max: int,
    input_file,
    output_path: Optional[Path],
    output_format: str,
    jobs: int,
    no_timing: bool,
    store: Optional[str],
    write_log: bool,
    recheck_path: Optional[Path],
    cap: Optional[int],
    endpoints: Optional[str],
    lenient: bool
) -> None:
    """Check the edge bounds, the structural characterization and the extremal sets.

    Exit code 0 when every report passes, 2 on a failure, 3 when only
    discrepancies were noted.

    Examples:
        python main.py verify --max-n 6 --claim bounds --k 2
        python main.py verify --output reports.json --jobs 4
    """
    if input_file is None and recheck_path is None and max_n > Config.ENUMERATION_CAP:
        raise click.BadParameter(
            f"internal enumeration stops at {Config.ENUMERATION_CAP}; pass --input for larger orders",
            param_hint='--max-n',
        )
    try:
        if recheck_path is not None:
            sys.exit(recheck_report_file(recheck_path))

        graphs = read_input_graphs(input_file, lenient) if input_file is not None else None
        reports: List[VerificationReport] = run_claims(
            claims or CLAIMS,
            max_n,
            ks or (1, 2, 3, 4),
            graphs=graphs,
            endpoints=endpoints,
            jobs=jobs,
            cap=cap,
            k_max=k_max,
        )
        payload = [report.to_dict(include_timing=not no_timing) for report in reports]

        if output_path is not None:
            write_reports(payload, output_path)
        if output_format == 'json' and output_path is None:
            click.echo(render_reports(payload), nl=False)
        else:
            display_report_summary(payload)

        if write_log:
            for report in payload:
                log_verification_event(report)
        if store is not None:
            manager = DatabaseManager(None if store == 'default' else store)
            try:
                manager.create_tables()
                stored = manager.save_reports(payload)
            finally:
                manager.close()
            click.echo(f"Stored {stored} verification runs", err=True)
    except (Graph6StreamError, GraphError, ValueError, RuntimeError) as e:
        click.echo(f"ERROR: {e}", err=True)
        sys.exit(EXIT_USAGE)

    code = exit_code(reports)
    if code:
        sys.exit(code)
