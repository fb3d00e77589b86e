"""Shared option handling for graph6-stream commands."""

from typing import Iterator, List, TextIO, Tuple

import click

from core.classify import ENDPOINT_RULES
from core.graph import Graph
from utils.graph6_stream import read_graph6_stream

EXIT_USAGE = 1

FORMATS = ('graph6', 'json', 'table')

endpoints_option = click.option(
    '--theta-prime-endpoints', 'endpoints',
    type=click.Choice(ENDPOINT_RULES),
    default=None,
    help='Theta-prime ear endpoint rule (default from configuration)'
)

cap_option = click.option(
    '--cap',
    type=click.IntRange(min=1),
    default=None,
    help='Vertex cap for cycle counting (default 16)'
)

lenient_option = click.option(
    '--lenient',
    is_flag=True,
    help='Skip malformed graph6 lines with a warning instead of failing'
)


def warn(message: str) -> None:
    click.echo(f"WARNING: {message}", err=True)


def iter_input_graphs(stream: TextIO, lenient: bool) -> Iterator[Tuple[int, Graph]]:
    """Graphs of an input stream; malformed lines are fatal unless lenient."""
    return read_graph6_stream(stream, lenient=lenient, warn=warn)


def read_input_graphs(stream: TextIO, lenient: bool) -> List[Graph]:
    return [graph for _, graph in iter_input_graphs(stream, lenient)]
