"""Bound command: closed-form maximum sizes of k-cacti."""

import json
import sys

import click

from core.construct import max_edges, max_edges_two_connected
from core.graph import GraphError
from src.commands.common import EXIT_USAGE


@click.command(name='bound')
@click.option('--n', type=int, required=True, help='Number of vertices')
@click.option('--k', type=int, required=True, help='Cactus class')
@click.option('--two-connected', is_flag=True, help='Bound for 2-connected k-cacti')
@click.option('--format', 'output_format', type=click.Choice(['text', 'json']), default='text',
              help='Output format')
def bound_command(n: int, k: int, two_connected: bool, output_format: str) -> None:
    """Print the maximum number of edges of a k-cactus on n vertices.

    Examples:
        python main.py bound --n 7 --k 2
        python main.py bound --n 10 --k 5 --two-connected
    """
    try:
        if two_connected:
            result = max_edges_two_connected(n, k)
            payload = {'n': n, 'k': k, 'two_connected': True, **result.to_dict()}
            text = str(result.value) if result.tight else f"{result.value} (not known to be attained)"
        else:
            value = max_edges(n, k)
            payload = {'n': n, 'k': k, 'two_connected': False, 'max_edges': value, 'tight': True}
            text = str(value)
    except GraphError as e:
        click.echo(f"ERROR: {e}", err=True)
        sys.exit(EXIT_USAGE)

    click.echo(json.dumps(payload) if output_format == 'json' else text)
