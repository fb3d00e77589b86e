"""Classify command: oracle and structural k-cactus checks over a graph6 stream."""

import json
import sys
from typing import Any, Dict, List, Optional

import click
from rich.console import Console
from rich.table import Table

from core.classify import block_kinds, structural_k_cactus
from core.cycles import edge_cycle_profile
from core.graph import Graph, GraphError, is_connected, write_graph6
from src.commands.common import (
    EXIT_USAGE,
    FORMATS,
    cap_option,
    endpoints_option,
    iter_input_graphs,
    lenient_option,
)
from utils.graph6_stream import Graph6StreamError


def classify_graph(
    g: Graph,
    k: Optional[int] = None,
    cap: Optional[int] = None,
    ceiling: Optional[int] = None,
    endpoints: Optional[str] = None
) -> Dict[str, Any]:
    """Build the classification payload for one graph.

    Args:
        g: Graph to classify
        k: Cactus class to test, if any
        cap: Vertex cap for cycle counting
        ceiling: Stop counting cycles through an edge beyond this value (raised to k when k is given)
        endpoints: Theta-prime endpoint rule

    Returns:
        JSON-ready dictionary
    """
    connected = is_connected(g)
    if k is not None and ceiling is not None:
        ceiling = max(ceiling, k)
    profile = edge_cycle_profile(g, cap=cap, ceiling=ceiling)
    payload: Dict[str, Any] = {
        'graph6': write_graph6(g),
        'n': g.n,
        'edges': g.size,
        'connected': connected,
        'cactus_number': profile.cactus_number,
        'edge_counts': profile.to_dict(),
        'blocks': [kind.describe() for _, kind in block_kinds(g, endpoints=endpoints)] if connected else None,
    }
    if k is not None:
        is_cactus = connected and profile.cactus_number <= k
        payload['k'] = k
        payload['k_cactus'] = is_cactus
        payload['nice'] = is_cactus and profile.cactus_number == k
        payload['structural'] = (
            structural_k_cactus(g, k, endpoints=endpoints) if connected and k <= 4 else None
        )
    return payload


def display_classifications(payloads: List[Dict[str, Any]]) -> None:
    """Render classification payloads as a rich table."""
    console = Console()
    table = Table(title="Graph Classification")
    table.add_column("graph6", style="cyan", no_wrap=True)
    table.add_column("n", justify="right")
    table.add_column("edges", justify="right")
    table.add_column("connected")
    table.add_column("cactus #", justify="right", style="bold")
    table.add_column("blocks")
    table.add_column("k-cactus")
    table.add_column("structural")

    for payload in payloads:
        table.add_row(
            payload['graph6'],
            str(payload['n']),
            str(payload['edges']),
            "yes" if payload['connected'] else "no",
            str(payload['cactus_number']),
            ", ".join(payload['blocks'] or []),
            _flag(payload.get('k_cactus')),
            _flag(payload.get('structural')),
        )
    console.print(table)


def _flag(value: Optional[bool]) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


@click.command(name='classify')
@click.option('--input', 'input_file', type=click.File('r'), default='-',
              help='graph6 input file (default: standard input)')
@click.option('--k', type=click.IntRange(min=1), default=None, help='Cactus class to test')
@click.option('--format', 'output_format', type=click.Choice(FORMATS), default='json',
              help='graph6 emits only the graphs that are k-cacti')
@click.option('--ceiling', type=click.IntRange(min=0), default=None,
              help='Report counts above this value as ceiling+1 (never below --k)')
@cap_option
@endpoints_option
@lenient_option
def classify_command(
    input_file,
    k: Optional[int],
    output_format: str,
    ceiling: Optional[int],
    cap: Optional[int],
    endpoints: Optional[str],
    lenient: bool
) -> None:
    """Report connectivity, cycle counts and block kinds for each input graph.

    Examples:
        echo "C~" | python main.py classify --k 4
        python main.py enumerate --n 6 --connected | python main.py classify --k 2 --format graph6
    """
    if output_format == 'graph6' and k is None:
        click.echo("ERROR: --format graph6 filters k-cacti and needs --k", err=True)
        sys.exit(EXIT_USAGE)
    try:
        payloads = []
        for _, graph in iter_input_graphs(input_file, lenient):
            payload = classify_graph(graph, k=k, cap=cap, ceiling=ceiling, endpoints=endpoints)
            if output_format == 'json':
                click.echo(json.dumps(payload))
            elif output_format == 'graph6':
                if payload['k_cactus']:
                    click.echo(payload['graph6'])
            else:
                payloads.append(payload)
        if output_format == 'table':
            display_classifications(payloads)
    except (Graph6StreamError, GraphError) as e:
        click.echo(f"ERROR: {e}", err=True)
        sys.exit(EXIT_USAGE)
