"""Tests for the per-edge cycle counting oracle."""

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from core.construct import ThetaSpec, build_complete, build_cycle, build_theta, build_theta_prime, theta_specs
from core.cycles import (
    cactus_number,
    cycles_through_edge,
    edge_cycle_profile,
    is_k_cactus,
    is_nice_k_cactus,
)
from core.decompose import is_two_connected
from core.enumeration import enumerate_graphs
from core.graph import Graph, GraphError, UnsupportedParameterError, UnsupportedSizeError, parse_graph6
from tests.strategies import graphs, relabelings


def cycle_edge_sets(g: Graph):
    """Every cycle of g as a frozenset of edges, via networkx."""
    found = []
    for cycle in nx.simple_cycles(g.to_networkx()):
        closed = cycle + cycle[:1]
        found.append(frozenset(tuple(sorted(pair)) for pair in zip(closed, closed[1:])))
    return found


class TestCyclesThroughEdge:
    """Test cases for cycles_through_edge."""

    def test_cycle_edges(self):
        g = build_cycle(6)
        assert all(cycles_through_edge(g, e) == 1 for e in g.edges)

    def test_k4_edges(self, k4):
        assert all(cycles_through_edge(k4, e) == 4 for e in k4.edges)

    def test_theta222_edges(self):
        g = build_theta(ThetaSpec.of(2, 2, 2))
        assert all(cycles_through_edge(g, e) == 2 for e in g.edges)

    def test_k5_edge(self):
        """Test 3 + 6 + 6 paths between the ends of a K5 edge."""
        assert cycles_through_edge(build_complete(5), (0, 1)) == 15

    def test_orientation_ignored(self, k4):
        assert cycles_through_edge(k4, (3, 1)) == 4

    def test_absent_edge_rejected(self, path3):
        with pytest.raises(GraphError, match="not an edge"):
            cycles_through_edge(path3, (0, 2))

    def test_cap_enforced(self):
        """Test that graphs above the cap are refused rather than truncated."""
        with pytest.raises(UnsupportedSizeError):
            cycles_through_edge(build_cycle(17), (0, 1))

    def test_cap_override(self):
        assert cycles_through_edge(build_cycle(17), (0, 1), cap=20) == 1

    @settings(max_examples=150)
    @given(graphs(max_n=7))
    def test_matches_networkx_cycles(self, g):
        """Test counts against networkx cycle enumeration."""
        cycles = cycle_edge_sets(g)
        for e in g.edges:
            assert cycles_through_edge(g, e) == sum(1 for cycle in cycles if e in cycle)


class TestEdgeCycleProfile:
    """Test cases for edge_cycle_profile."""

    def test_tree(self):
        tree = Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
        profile = edge_cycle_profile(tree)

        assert set(profile.counts.values()) == {0}
        assert profile.cactus_number == 0

    def test_theta123(self):
        profile = edge_cycle_profile(build_theta(ThetaSpec.of(1, 2, 3)))

        assert set(profile.counts.values()) == {2}
        assert profile.cactus_number == 2

    def test_theta_prime_mixes_three_and_four(self):
        """Test an ear between two interior vertices of one theta path."""
        g = build_theta_prime(ThetaSpec.of(1, 2, 4), 1, 3, 5)
        profile = edge_cycle_profile(g)

        assert set(profile.counts.values()) == {3, 4}
        assert profile.cactus_number == 4

    def test_branch_endpoint_ear_graph(self):
        """Test the 5-vertex graph whose ear ends at a branch vertex."""
        profile = edge_cycle_profile(parse_graph6("DU{"))

        assert profile.counts[(0, 3)] == 4
        assert profile.cactus_number == 4

    def test_to_dict_keys(self, theta122):
        assert edge_cycle_profile(theta122).to_dict() == {
            '0-1': 2, '0-2': 2, '0-3': 2, '1-2': 2, '1-3': 2,
        }

    def test_ceiling_clips_counts(self):
        profile = edge_cycle_profile(build_complete(5), ceiling=4)

        assert set(profile.counts.values()) == {5}
        assert profile.ceiling == 4

    def test_empty_graph(self):
        assert edge_cycle_profile(Graph(0)).cactus_number == 0


class TestCactusNumber:
    """Test cases for cactus_number and the membership predicates."""

    def test_ceiling_returns_one_above(self):
        assert cactus_number(build_complete(5), ceiling=4) == 5
        assert cactus_number(build_complete(5)) == 15

    def test_ceiling_exact_below(self, k4):
        assert cactus_number(k4, ceiling=6) == 4

    def test_tree_is_every_k_cactus(self, path3):
        assert all(is_k_cactus(path3, k) for k in range(1, 6))

    def test_k4_membership(self, k4):
        assert not is_k_cactus(k4, 3)
        assert is_k_cactus(k4, 4)

    def test_theta122_is_2_cactus(self, theta122):
        assert is_k_cactus(theta122, 2)

    def test_disconnected_is_never_a_cactus(self):
        assert not is_k_cactus(Graph(2), 1)
        assert not is_k_cactus(Graph(0), 1)
        assert not is_nice_k_cactus(Graph(0), 1)

    def test_k_must_be_positive(self, triangle):
        with pytest.raises(UnsupportedParameterError):
            is_k_cactus(triangle, 0)

    def test_nice(self):
        assert is_nice_k_cactus(build_cycle(6), 1)
        assert is_nice_k_cactus(build_theta(ThetaSpec.of(1, 2, 2, 2, 2)), 4)

    def test_tree_is_never_nice(self, path3):
        assert not any(is_nice_k_cactus(path3, k) for k in range(1, 5))

    def test_nice_needs_exact_k(self, k4):
        assert not is_nice_k_cactus(k4, 5)

    def test_monotone_in_k(self):
        """Test that every k-cactus on at most 6 vertices is an l-cactus for l > k."""
        for n in range(1, 7):
            for g in enumerate_graphs(n, connected_only=True):
                number = cactus_number(g)
                for k, l in itertools.combinations(range(1, 6), 2):
                    if is_k_cactus(g, k):
                        assert is_k_cactus(g, l)
                assert is_k_cactus(g, max(number, 1))

    def test_theta_counts_are_t_minus_one(self):
        """Test that every edge of a theta graph lies on t-1 cycles."""
        for spec in theta_specs(9):
            profile = edge_cycle_profile(build_theta(spec))
            assert set(profile.counts.values()) == {spec.t - 1}

    @given(relabelings(max_n=7))
    def test_invariant_under_relabeling(self, case):
        g, perm = case
        relabeled = g.relabel(perm)
        profile = edge_cycle_profile(g)
        moved = edge_cycle_profile(relabeled)
        for (u, v), count in profile.counts.items():
            a, b = sorted((perm[u], perm[v]))
            assert moved.counts[(a, b)] == count


class TestTwoConnectedFloor:
    """Test cases for cycles in 2-connected graphs."""

    def test_every_edge_on_a_cycle(self):
        for n in range(3, 7):
            for g in enumerate_graphs(n, connected_only=True):
                if is_two_connected(g):
                    assert min(edge_cycle_profile(g).counts.values()) >= 1

    def test_every_edge_pair_shares_a_cycle(self):
        for n in range(3, 7):
            for g in enumerate_graphs(n, connected_only=True):
                if not is_two_connected(g):
                    continue
                cycles = cycle_edge_sets(g)
                for e, f in itertools.combinations(g.sorted_edges(), 2):
                    assert any(e in cycle and f in cycle for cycle in cycles), (str(g), e, f)
