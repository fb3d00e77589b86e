"""Enumerate command: one graph6 line per isomorphism class."""

import sys

import click

from core.enumeration import enumerate_graphs
from core.graph import GraphError, write_graph6
from src.commands.common import EXIT_USAGE


@click.command(name='enumerate')
@click.option('--n', type=int, required=True, help='Number of vertices (1-8)')
@click.option('--connected', is_flag=True, help='Connected graphs only')
def enumerate_command(n: int, connected: bool) -> None:
    """Print every graph on n vertices up to isomorphism, in canonical order."""
    try:
        for graph in enumerate_graphs(n, connected_only=connected):
            click.echo(write_graph6(graph))
    except GraphError as e:
        click.echo(f"ERROR: {e}", err=True)
        sys.exit(EXIT_USAGE)
