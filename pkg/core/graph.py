"""Immutable simple graphs, graph6 serialization and canonical forms."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from core.config import Config

MAX_ORDER = 64
GRAPH6_HEADER = '>>graph6<<'

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Base error for invalid graphs and unsupported graph operations."""
    pass


class Graph6ParseError(GraphError):
    """Raised when a graph6 line cannot be decoded."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(GraphError):
    """Raised when an operation is asked to work beyond its size cap."""
    pass


class UnsupportedParameterError(GraphError):
    """Raised for parameters outside the range a result is claimed for."""
    pass


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge {u, v} as an ordered pair (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset = frozenset()
    rows: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise UnsupportedSizeError(f"Graph order {self.n} outside 0..{MAX_ORDER}")
        rows = [0] * self.n
        for edge in self.edges:
            u, v = edge
            if not (0 <= u < v < self.n):
                raise GraphError(f"Invalid edge {edge} for a graph on {self.n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, 'rows', tuple(rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from any iterable of vertex pairs.

        Raises:
            GraphError: On self-loops or repeated edges.
        """
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            edge = normalize_edge(u, v)
            if edge in seen:
                raise GraphError(f"Duplicate edge {edge}")
            seen.add(edge)
        return cls(n, frozenset(seen))

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> Graph:
        """Convert a networkx graph, relabeling its nodes in sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.sorted_edges())
        return nx_graph

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count('1')

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in range(self.n)]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("Relabeling must be a permutation of the vertex set")
        return Graph(self.n, frozenset(normalize_edge(perm[u], perm[v]) for u, v in self.edges))

    def __str__(self) -> str:
        return write_graph6(self)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class label: the graph6 bytes of the canonical relabeling."""

    label: bytes

    def __str__(self) -> str:
        return self.label.decode('ascii')


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def connected_within(rows: Sequence[int], mask: int) -> bool:
    """True iff the vertices in `mask` induce a connected subgraph (mask non-empty)."""
    if not mask:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one component. The empty graph is not connected."""
    if g.n == 0:
        return False
    return connected_within(g.rows, (1 << g.n) - 1)


# graph6

def _header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return '~' + ''.join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def _pack_bits(bits: Sequence[int]) -> str:
    chars = []
    for start in range(0, len(bits), 6):
        chunk = list(bits[start:start + 6])
        chunk += [0] * (6 - len(chunk))
        value = 0
        for bit in chunk:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return ''.join(chars)


def _adjacency_bits(rows: Sequence[int], order: Sequence[int]) -> List[int]:
    """Upper-triangle column-major adjacency bits of the graph listed in `order`."""
    n = len(order)
    return [rows[order[i]] >> order[j] & 1 for j in range(1, n) for i in range(j)]


def write_graph6(g: Graph) -> str:
    """Encode g as a graph6 line (without newline)."""
    if g.n > MAX_ORDER:
        raise UnsupportedSizeError(f"graph6 output supports n <= {MAX_ORDER}, got {g.n}")
    return _header(g.n) + _pack_bits(_adjacency_bits(g.rows, range(g.n)))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. An optional `>>graph6<<` prefix is accepted.

    Raises:
        Graph6ParseError: Malformed header, truncated or trailing bit field,
            or characters outside the printable graph6 range.
        UnsupportedSizeError: Encoded order above 64.
    """
    line = text.strip()
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not line:
        raise Graph6ParseError("Empty graph6 line", offset=base)
    values = []
    for i, ch in enumerate(line):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6ParseError(f"Character {ch!r} outside graph6 range", offset=base + i)
        values.append(code - 63)

    if values[0] < 63:
        n, pos = values[0], 1
    else:
        if len(values) > 1 and values[1] == 63:
            raise UnsupportedSizeError(f"graph6 order above {MAX_ORDER} is not supported")
        if len(values) < 4:
            raise Graph6ParseError("Truncated graph6 header", offset=base + len(values))
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        pos = 4
        if n > MAX_ORDER:
            raise UnsupportedSizeError(f"graph6 order {n} above {MAX_ORDER} is not supported")

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = values[pos:]
    if len(body) < nchars:
        raise Graph6ParseError(
            f"Truncated bit field: expected {nchars} characters, found {len(body)}",
            offset=base + len(values),
        )
    if len(body) > nchars:
        raise Graph6ParseError("Unexpected trailing data", offset=base + pos + nchars)

    edges = set()
    index = 0
    for j in range(1, n):
        for i in range(j):
            if body[index // 6] >> (5 - index % 6) & 1:
                edges.add((i, j))
            index += 1
    return Graph(n, frozenset(edges))


# canonical form

def _refine(rows: Sequence[int], colors: List[int]) -> List[int]:
    """Refine a vertex coloring until it is equitable.

    Colors are re-ranked by sorted signature at each round, so the result
    depends only on the isomorphism type of (graph, coloring).
    """
    n = len(colors)
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in iter_bits(rows[v]))))
            for v in range(n)
        ]
        ranks = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranks[sig] for sig in signatures]
        if len(ranks) == len(set(colors)):
            return refined
        colors = refined


def _twins(rows: Sequence[int], u: int, w: int) -> bool:
    return rows[u] & ~(1 << w) == rows[w] & ~(1 << u)


def _individualize(colors: List[int], v: int) -> List[int]:
    keyed = [(c, 0 if w == v else 1) for w, c in enumerate(colors)]
    ranks = {key: rank for rank, key in enumerate(sorted(set(keyed)))}
    return [ranks[key] for key in keyed]


def _best_order(rows: Sequence[int], n: int) -> List[int]:
    best: List[Optional[Tuple[List[int], List[int]]]] = [None]

    def search(colors: List[int]) -> None:
        colors = _refine(rows, colors)
        counts = Counter(colors)
        if len(counts) == n:
            order = sorted(range(n), key=colors.__getitem__)
            bits = _adjacency_bits(rows, order)
            if best[0] is None or bits < best[0][0]:
                best[0] = (bits, order)
            return
        target = min(color for color, size in counts.items() if size > 1)
        tried: List[int] = []
        for v in range(n):
            if colors[v] != target:
                continue
            # swapping twins is an automorphism fixing the current partition
            if any(_twins(rows, v, w) for w in tried):
                continue
            tried.append(v)
            search(_individualize(colors, v))

    degrees = [bin(row).count('1') for row in rows]
    search(degrees)
    return best[0][1]


def canonical_label_of_rows(n: int, rows: Sequence[int]) -> bytes:
    """Canonical label computed straight from adjacency rows (no cap check)."""
    if n == 0:
        return _header(0).encode('ascii')
    order = _best_order(rows, n)
    return (_header(n) + _pack_bits(_adjacency_bits(rows, order))).encode('ascii')


def canonical_form(g: Graph, cap: Optional[int] = None) -> CanonicalForm:
    """Canonical form: minimum adjacency bit string over refinement-pruned orderings.

    Raises:
        UnsupportedSizeError: If g.n exceeds the canonical cap (default 10).
    """
    cap = Config.CANONICAL_CAP if cap is None else cap
    if g.n > cap:
        raise UnsupportedSizeError(f"Canonical form supports n <= {cap}, got {g.n}")
    return CanonicalForm(canonical_label_of_rows(g.n, g.rows))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return parse_graph6(str(canonical_form(g)))
