"""Exhaustive generation of graphs up to isomorphism by vertex augmentation."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Tuple

from core.config import Config
from core.graph import Graph, UnsupportedSizeError, canonical_label_of_rows, is_connected, parse_graph6


@lru_cache(maxsize=None)
def graph_classes(n: int) -> Tuple[Graph, ...]:
    """One canonical representative per isomorphism class on n vertices.

    Each class on n-1 vertices is extended by a new vertex joined to every
    possible neighbor subset; results are deduplicated by canonical label
    and returned in label order.
    """
    if not 1 <= n <= Config.ENUMERATION_CAP:
        raise UnsupportedSizeError(
            f"Internal enumeration covers 1 <= n <= {Config.ENUMERATION_CAP}, got {n}; "
            "supply an external graph6 stream instead"
        )
    if n == 1:
        return (Graph(1),)
    newest = n - 1
    labels = set()
    for parent in graph_classes(n - 1):
        for subset in range(1 << newest):
            rows = [row | ((subset >> v) & 1) << newest for v, row in enumerate(parent.rows)]
            rows.append(subset)
            labels.add(canonical_label_of_rows(n, rows))
    return tuple(parse_graph6(label.decode('ascii')) for label in sorted(labels))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Stream the isomorphism classes on n vertices (n <= 8)."""
    for graph in graph_classes(n):
        if not connected_only or is_connected(graph):
            yield graph
