"""Per-edge cycle counting: the definitional k-cactus oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

from core.config import Config
from core.graph import (
    Edge,
    Graph,
    GraphError,
    UnsupportedParameterError,
    UnsupportedSizeError,
    is_connected,
    normalize_edge,
)


@dataclass(frozen=True)
class EdgeCycleProfile:
    """Number of cycles through each edge.

    With a ceiling, counts above it are stored as ceiling + 1.
    """

    counts: Dict[Edge, int] = field(default_factory=dict)
    ceiling: Optional[int] = None

    @property
    def cactus_number(self) -> int:
        return max(self.counts.values(), default=0)

    def to_dict(self) -> Dict[str, int]:
        return {f"{u}-{v}": count for (u, v), count in sorted(self.counts.items())}


def _check_cap(g: Graph, cap: Optional[int]) -> None:
    cap = Config.CYCLE_CAP if cap is None else cap
    if g.n > cap:
        raise UnsupportedSizeError(
            f"Cycle counting is capped at {cap} vertices, got {g.n}"
        )


def _count_paths(rows: Sequence[int], current: int, target: int, visited: int,
                 limit: Optional[int]) -> int:
    """Simple paths current -> target avoiding `visited`; stops once above `limit`."""
    total = 0
    candidates = rows[current] & ~visited
    while candidates:
        low = candidates & -candidates
        candidates ^= low
        nxt = low.bit_length() - 1
        if nxt == target:
            total += 1
        else:
            remaining = None if limit is None else limit - total
            total += _count_paths(rows, nxt, target, visited | low, remaining)
        if limit is not None and total > limit:
            return total
    return total


def _cycles_through(g: Graph, edge: Edge, limit: Optional[int]) -> int:
    u, v = edge
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return _count_paths(rows, u, v, 1 << u, limit)


def cycles_through_edge(g: Graph, e: Edge, *, cap: Optional[int] = None) -> int:
    """Exact number of cycles of g containing edge e.

    Raises:
        GraphError: If e is not an edge of g.
        UnsupportedSizeError: If g exceeds the oracle cap.
    """
    _check_cap(g, cap)
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")
    return _cycles_through(g, normalize_edge(u, v), None)


def edge_cycle_profile(g: Graph, *, cap: Optional[int] = None,
                       ceiling: Optional[int] = None) -> EdgeCycleProfile:
    """Cycle counts for every edge, optionally clipped just above `ceiling`."""
    _check_cap(g, cap)
    counts = {}
    for edge in g.sorted_edges():
        count = _cycles_through(g, edge, ceiling)
        counts[edge] = count if ceiling is None else min(count, ceiling + 1)
    return EdgeCycleProfile(counts=counts, ceiling=ceiling)


def cactus_number(g: Graph, *, cap: Optional[int] = None, ceiling: Optional[int] = None) -> int:
    """Largest per-edge cycle count (0 for forests).

    With a ceiling the result is exact up to the ceiling and ceiling + 1 beyond it.
    """
    _check_cap(g, cap)
    best = 0
    for edge in g.sorted_edges():
        best = max(best, _cycles_through(g, edge, ceiling))
        if ceiling is not None and best > ceiling:
            return ceiling + 1
    return best


def _check_k(k: int) -> None:
    if k < 1:
        raise UnsupportedParameterError(f"k must be a positive integer, got {k}")


def is_k_cactus(g: Graph, k: int, *, cap: Optional[int] = None) -> bool:
    """True iff g is connected and every edge lies on at most k cycles."""
    _check_k(k)
    _check_cap(g, cap)
    if not is_connected(g):
        return False
    return cactus_number(g, cap=cap, ceiling=k) <= k


def is_nice_k_cactus(g: Graph, k: int, *, cap: Optional[int] = None) -> bool:
    """True iff g is a k-cactus with some edge on exactly k cycles."""
    _check_k(k)
    _check_cap(g, cap)
    if not is_connected(g):
        return False
    return cactus_number(g, cap=cap, ceiling=k) == k
