"""graph6 stream reading for command input."""

from typing import Callable, Iterator, Optional, TextIO, Tuple

from core.graph import Graph, GraphError, GRAPH6_HEADER, parse_graph6


class Graph6StreamError(ValueError):
    """Raised for a malformed line in a graph6 stream."""

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def read_graph6_stream(
    stream: TextIO,
    lenient: bool = False,
    warn: Optional[Callable[[str], None]] = None,
) -> Iterator[Tuple[int, Graph]]:
    """Yield (line number, graph) for each non-blank line of a graph6 stream.

    Args:
        stream: Text stream with one graph6 string per line
        lenient: Skip malformed lines instead of failing
        warn: Called with a message for each skipped line

    Raises:
        Graph6StreamError: On a malformed line when not lenient.
    """
    for line_number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        try:
            graph = parse_graph6(line)
        except GraphError as e:
            if not lenient:
                raise Graph6StreamError(line_number, str(e))
            if warn is not None:
                warn(f"skipping line {line_number}: {e}")
            continue
        yield line_number, graph
