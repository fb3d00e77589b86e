"""Structural recognition of blocks and of k-cacti for k <= 4."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from core.config import Config
from core.construct import EarAttachment, ThetaSpec
from core.decompose import Block, blocks, is_two_connected
from core.graph import Graph, GraphError, UnsupportedParameterError, is_connected, normalize_edge

ENDPOINT_RULES = ('strict', 'relaxed')


class NotABlockError(GraphError):
    """Raised when a graph is neither a single edge nor 2-connected."""
    pass


class BlockType(Enum):
    EDGE = "edge"
    CYCLE = "cycle"
    THETA = "theta"
    THETA_PRIME = "theta-prime"
    OTHER = "other"


@dataclass(frozen=True)
class BlockKind:
    """Catalog entry of a block.

    Cycle blocks carry `length`; theta blocks carry `theta`; theta-prime
    blocks carry the base theta in `theta` plus the ear length and
    where the ear attaches.
    """

    type: BlockType
    length: Optional[int] = None
    theta: Optional[ThetaSpec] = None
    ear_length: Optional[int] = None
    attachment: Optional[EarAttachment] = None

    @property
    def t(self) -> Optional[int]:
        return self.theta.t if self.type == BlockType.THETA else None

    def describe(self) -> str:
        if self.type == BlockType.EDGE:
            return "edge"
        if self.type == BlockType.CYCLE:
            return f"C{self.length}"
        if self.type == BlockType.THETA:
            return str(self.theta)
        if self.type == BlockType.THETA_PRIME:
            return f"theta'{str(self.theta)[len('theta'):]}+ear{self.ear_length}[{self.attachment.value}]"
        return "other"

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {'type': self.type.value, 'description': self.describe()}
        if self.length is not None:
            payload['length'] = self.length
        if self.theta is not None:
            payload['theta'] = list(self.theta.lengths)
        if self.ear_length is not None:
            payload['ear_length'] = self.ear_length
            payload['attachment'] = self.attachment.value
        return payload


def resolve_endpoints(endpoints: Optional[str]) -> str:
    rule = Config.THETA_PRIME_ENDPOINTS if endpoints is None else endpoints
    if rule not in ENDPOINT_RULES:
        raise UnsupportedParameterError(
            f"theta-prime endpoint rule must be one of {', '.join(ENDPOINT_RULES)}, got {rule!r}"
        )
    return rule


def _theta_structure(g: Graph) -> Optional[Tuple[int, int, List[List[int]]]]:
    """Branch vertices and u-to-v paths if g is a theta graph."""
    degrees = g.degrees()
    branch = [v for v, d in enumerate(degrees) if d != 2]
    if len(branch) != 2:
        return None
    u, v = branch
    if degrees[u] < 3 or degrees[u] != degrees[v]:
        return None
    paths = []
    visited = {u, v}
    for start in g.neighbors(u):
        path = [u, start]
        while path[-1] != v:
            current = path[-1]
            if degrees[current] != 2 or current in visited:
                return None
            visited.add(current)
            path.append(next(w for w in g.neighbors(current) if w != path[-2]))
        paths.append(path)
    if len(visited) != g.n:
        return None
    return u, v, paths


def theta_spec_of(g: Graph) -> Optional[ThetaSpec]:
    """The path lengths of g if it is a theta graph, else None."""
    structure = _theta_structure(g)
    if structure is None:
        return None
    return ThetaSpec(tuple(len(path) - 1 for path in structure[2]))


def maximal_chains(g: Graph) -> List[Tuple[int, ...]]:
    """Paths between vertices of degree >= 3 whose interior vertices have degree 2."""
    degrees = g.degrees()
    chains = set()
    for x in range(g.n):
        if degrees[x] < 3:
            continue
        for y in g.neighbors(x):
            path = [x, y]
            while degrees[path[-1]] == 2:
                current = path[-1]
                path.append(next(w for w in g.neighbors(current) if w != path[-2]))
            chains.add(min(tuple(path), tuple(reversed(path))))
    return sorted(chains)


def _delete_chain(g: Graph, chain: Tuple[int, ...]) -> Tuple[Graph, Dict[int, int]]:
    interior = set(chain[1:-1])
    chain_edges = {normalize_edge(a, b) for a, b in zip(chain, chain[1:])}
    keep = [v for v in range(g.n) if v not in interior]
    index = {v: i for i, v in enumerate(keep)}
    remaining = frozenset(
        (index[a], index[b]) for a, b in g.edges - chain_edges
    )
    return Graph(len(keep), remaining), index


def _theta_prime_candidates(g: Graph) -> List[BlockKind]:
    candidates = []
    for chain in maximal_chains(g):
        base, index = _delete_chain(g, chain)
        structure = _theta_structure(base)
        if structure is None or len(structure[2]) != 3:
            continue
        u, v, paths = structure
        ends = {index[chain[0]], index[chain[-1]]}
        hits = len(ends & {u, v})
        if hits == 2:
            continue
        if hits == 1:
            attachment = EarAttachment.BRANCH_ENDPOINT
        else:
            owner = {w: i for i, path in enumerate(paths) for w in path[1:-1]}
            x, y = sorted(ends)
            attachment = EarAttachment.SAME_PATH if owner[x] == owner[y] else EarAttachment.CROSS_PATH
        candidates.append(BlockKind(
            BlockType.THETA_PRIME,
            theta=ThetaSpec(tuple(len(path) - 1 for path in paths)),
            ear_length=len(chain) - 1,
            attachment=attachment,
        ))
    return candidates


def classify_block(b: Graph, *, endpoints: Optional[str] = None) -> BlockKind:
    """Classify a block as edge, cycle, theta, theta-prime or other.

    A theta-prime is recognized by deleting each maximal chain in turn and
    testing whether a theta graph with three paths remains. Under the
    'relaxed' endpoint rule an ear may end at one branch vertex of that
    theta; a decomposition satisfying the strict rule is reported when
    one exists.

    Raises:
        NotABlockError: If b is neither a single edge nor 2-connected.
    """
    rule = resolve_endpoints(endpoints)
    if b.n == 2 and b.size == 1:
        return BlockKind(BlockType.EDGE)
    if not is_two_connected(b):
        raise NotABlockError("Input is neither a single edge nor 2-connected")
    if all(d == 2 for d in b.degrees()):
        return BlockKind(BlockType.CYCLE, length=b.n)
    spec = theta_spec_of(b)
    if spec is not None:
        return BlockKind(BlockType.THETA, theta=spec)
    if b.size - b.n == 2:
        candidates = _theta_prime_candidates(b)
        strict = [kind for kind in candidates if kind.attachment != EarAttachment.BRANCH_ENDPOINT]
        if strict:
            return strict[0]
        if candidates and rule == 'relaxed':
            return candidates[0]
    return BlockKind(BlockType.OTHER)


def block_kinds(g: Graph, *, endpoints: Optional[str] = None) -> List[Tuple[Block, BlockKind]]:
    """Every block of a connected graph with its kind."""
    return [(block, classify_block(block.as_graph(), endpoints=endpoints)) for block in blocks(g).blocks]


def allowed_in(kind: BlockKind, k: int) -> bool:
    """Whether a block of this kind may appear in a k-cactus (k <= 4)."""
    if kind.type in (BlockType.EDGE, BlockType.CYCLE):
        return True
    if kind.type == BlockType.THETA:
        return kind.theta.t <= k + 1
    if kind.type == BlockType.THETA_PRIME:
        return k == 4
    return False


def structural_k_cactus(g: Graph, k: int, *, endpoints: Optional[str] = None) -> bool:
    """Decide k-cactus membership (k in 1..4) from block kinds alone.

    Raises:
        UnsupportedParameterError: If k is outside 1..4.
        GraphError: If g is not connected.
    """
    if k not in range(1, 5):
        raise UnsupportedParameterError(f"Structural recognition covers k in 1..4, got {k}")
    if not is_connected(g):
        raise GraphError("Structural recognition requires a connected graph")
    rule = resolve_endpoints(endpoints)
    return all(allowed_in(kind, k) for _, kind in block_kinds(g, endpoints=rule))
