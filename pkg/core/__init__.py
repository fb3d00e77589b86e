"""Core graph algorithms for the k-cactus toolkit."""

from .graph import Graph, GraphError, parse_graph6, write_graph6, canonical_form, is_connected
from .cycles import cactus_number, edge_cycle_profile, is_k_cactus, is_nice_k_cactus

__all__ = [
    'Graph',
    'GraphError',
    'parse_graph6',
    'write_graph6',
    'canonical_form',
    'is_connected',
    'cactus_number',
    'edge_cycle_profile',
    'is_k_cactus',
    'is_nice_k_cactus',
]
