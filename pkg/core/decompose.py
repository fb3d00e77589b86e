"""Block decomposition, 2-connectivity and ear decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

import networkx as nx

from core.graph import Edge, Graph, GraphError, connected_within, is_connected, normalize_edge


@dataclass(frozen=True)
class Block:
    """A block given in parent labels."""

    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    def as_graph(self) -> Graph:
        """The block as a standalone graph, vertices renumbered in sorted order."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return Graph(len(self.vertices), frozenset(
            normalize_edge(index[u], index[v]) for u, v in self.edges
        ))


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[Block, ...]
    cut_vertices: FrozenSet[int]


@dataclass(frozen=True)
class EarDecomposition:
    """A cycle q0 (closing edge implied) followed by ears with fresh interiors."""

    q0: Tuple[int, ...]
    ears: Tuple[Tuple[int, ...], ...]

    @property
    def ear_count(self) -> int:
        return len(self.ears)

    def edges(self) -> List[Edge]:
        pieces = [self.q0 + self.q0[:1]] + list(self.ears)
        return [normalize_edge(a, b) for piece in pieces for a, b in zip(piece, piece[1:])]


def blocks(g: Graph) -> BlockDecomposition:
    """Split a connected graph into its blocks, ordered by smallest vertex.

    A single vertex has no blocks.

    Raises:
        GraphError: If g is not connected.
    """
    if not is_connected(g):
        raise GraphError("Block decomposition requires a connected graph")
    nx_graph = g.to_networkx()
    found = []
    for component in nx.biconnected_component_edges(nx_graph):
        edges = tuple(sorted(normalize_edge(u, v) for u, v in component))
        vertices = tuple(sorted({v for edge in edges for v in edge}))
        found.append(Block(vertices, edges))
    found.sort(key=lambda block: (block.vertices, block.edges))
    return BlockDecomposition(
        blocks=tuple(found),
        cut_vertices=frozenset(nx.articulation_points(nx_graph)),
    )


def is_two_connected(g: Graph) -> bool:
    """True iff g is connected, has at least 3 vertices and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    full = (1 << g.n) - 1
    return all(connected_within(g.rows, full & ~(1 << v)) for v in range(g.n))


def _chain_vertices(chain: List[Tuple[int, int]]) -> Tuple[int, ...]:
    path = [chain[0][0], chain[0][1]]
    for u, v in chain[1:]:
        path.append(v if u == path[-1] else u)
    return tuple(path)


def ear_decomposition(g: Graph) -> EarDecomposition:
    """Ear decomposition from the DFS chain decomposition rooted at vertex 0.

    Raises:
        GraphError: If g is not 2-connected.
    """
    if not is_two_connected(g):
        raise GraphError("Ear decomposition requires a 2-connected graph")
    chains = [_chain_vertices(chain) for chain in nx.chain_decomposition(g.to_networkx(), root=0)]

    first = chains[0]
    if first[0] != first[-1]:
        raise GraphError("Chain decomposition did not open with a cycle")
    q0 = first[:-1]
    seen = set(q0)
    ears = []
    for path in chains[1:]:
        if path[0] not in seen or path[-1] not in seen or path[0] == path[-1]:
            raise GraphError(f"Chain {path} is not an ear of the preceding union")
        interior = path[1:-1]
        if seen.intersection(interior):
            raise GraphError(f"Chain {path} reuses an interior vertex")
        seen.update(interior)
        ears.append(path)

    decomposition = EarDecomposition(q0=q0, ears=tuple(ears))
    if sorted(decomposition.edges()) != g.sorted_edges():
        raise GraphError("Ear decomposition does not cover the graph exactly")
    return decomposition


def add_ear(g: Graph, u: int, v: int, length: int) -> Graph:
    """Attach a path of `length` edges from u to v through fresh vertices n, n+1, ...

    Raises:
        GraphError: If u == v, a vertex is out of range, length < 1, or
            length == 1 would duplicate an existing edge.
    """
    if u == v:
        raise GraphError("Ear endpoints must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"Ear endpoints ({u}, {v}) out of range for n={g.n}")
    if length < 1:
        raise GraphError("Ear length must be positive")
    if length == 1 and g.has_edge(u, v):
        raise GraphError(f"Edge ({u}, {v}) already present")
    path = [u] + list(range(g.n, g.n + length - 1)) + [v]
    new_edges = {normalize_edge(a, b) for a, b in zip(path, path[1:])}
    return Graph(g.n + length - 1, g.edges | frozenset(new_edges))

