"""Decompose command: blocks, cut vertices and ear decompositions."""

import json
import sys
from typing import Any, Dict, List, Optional

import click
from rich.console import Console
from rich.table import Table

from core.classify import classify_block
from core.decompose import blocks, ear_decomposition, is_two_connected
from core.graph import Graph, GraphError, is_connected, write_graph6
from src.commands.common import EXIT_USAGE, endpoints_option, iter_input_graphs, lenient_option
from utils.graph6_stream import Graph6StreamError


def decompose_graph(g: Graph, endpoints: Optional[str] = None) -> Dict[str, Any]:
    """Block and ear decomposition payload for one graph.

    Disconnected graphs get an `error` entry instead of blocks.
    """
    payload: Dict[str, Any] = {'graph6': write_graph6(g), 'n': g.n, 'edges': g.size}
    if not is_connected(g):
        payload['error'] = "graph is not connected; split components first"
        return payload
    decomposition = blocks(g)
    payload['blocks'] = [
        {
            'vertices': list(block.vertices),
            'edges': [list(edge) for edge in block.edges],
            'kind': classify_block(block.as_graph(), endpoints=endpoints).to_dict(),
        }
        for block in decomposition.blocks
    ]
    payload['cut_vertices'] = sorted(decomposition.cut_vertices)
    if is_two_connected(g):
        ears = ear_decomposition(g)
        payload['ear_decomposition'] = {
            'q0': list(ears.q0),
            'ears': [list(ear) for ear in ears.ears],
        }
    else:
        payload['ear_decomposition'] = None
    return payload


def display_decompositions(payloads: List[Dict[str, Any]]) -> None:
    console = Console()
    table = Table(title="Block Decomposition")
    table.add_column("graph6", style="cyan", no_wrap=True)
    table.add_column("block vertices")
    table.add_column("kind")
    table.add_column("cut vertices")
    table.add_column("ears", justify="right")

    for payload in payloads:
        if 'error' in payload:
            table.add_row(payload['graph6'], "-", payload['error'], "-", "-")
            continue
        ears = payload['ear_decomposition']
        for index, block in enumerate(payload['blocks'] or [{'vertices': [0], 'kind': {'description': '-'}}]):
            first = index == 0
            table.add_row(
                payload['graph6'] if first else "",
                " ".join(map(str, block['vertices'])),
                block['kind']['description'],
                " ".join(map(str, payload['cut_vertices'])) if first else "",
                (str(len(ears['ears'])) if ears else "-") if first else "",
            )
    console.print(table)


@click.command(name='decompose')
@click.option('--input', 'input_file', type=click.File('r'), default='-',
              help='graph6 input file (default: standard input)')
@click.option('--format', 'output_format', type=click.Choice(['json', 'table']), default='json',
              help='Output format')
@endpoints_option
@lenient_option
def decompose_command(input_file, output_format: str, endpoints: Optional[str], lenient: bool) -> None:
    """Print blocks and, for 2-connected graphs, an ear decomposition."""
    try:
        payloads = []
        for _, graph in iter_input_graphs(input_file, lenient):
            payload = decompose_graph(graph, endpoints=endpoints)
            if output_format == 'json':
                click.echo(json.dumps(payload))
            else:
                payloads.append(payload)
        if output_format == 'table':
            display_decompositions(payloads)
    except (Graph6StreamError, GraphError) as e:
        click.echo(f"ERROR: {e}", err=True)
        sys.exit(EXIT_USAGE)
