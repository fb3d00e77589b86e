"""Tests for block classification and structural k-cactus recognition."""

import pytest

from core.classify import (
    BlockKind,
    BlockType,
    NotABlockError,
    allowed_in,
    block_kinds,
    classify_block,
    maximal_chains,
    resolve_endpoints,
    structural_k_cactus,
    theta_spec_of,
)
from core.construct import (
    EarAttachment,
    ThetaSpec,
    build_complete,
    build_cycle,
    build_theta,
    coalesce,
    theta_prime_realizations,
    theta_specs,
    theta_tilde,
)
from core.cycles import is_k_cactus
from core.enumeration import enumerate_graphs
from core.graph import Graph, GraphError, UnsupportedParameterError, parse_graph6


class TestClassifyBlock:
    """Test cases for classify_block."""

    def test_edge(self):
        assert classify_block(Graph.from_edges(2, [(0, 1)])).type == BlockType.EDGE

    def test_triangle_is_cycle(self, triangle):
        kind = classify_block(triangle)

        assert kind.type == BlockType.CYCLE
        assert kind.length == 3
        assert kind.describe() == "C3"

    def test_theta1222(self):
        kind = classify_block(build_theta(ThetaSpec.of(1, 2, 2, 2)))

        assert kind.type == BlockType.THETA
        assert kind.theta.lengths == (1, 2, 2, 2)
        assert kind.t == 4
        assert kind.describe() == "theta(1,2,2,2)"

    def test_k4_is_theta_prime(self, k4):
        """Test that K4 is theta(1,2,2) plus a chord between its two degree-2 vertices."""
        kind = classify_block(k4)

        assert kind.type == BlockType.THETA_PRIME
        assert kind.theta.lengths == (1, 2, 2)
        assert kind.ear_length == 1
        assert kind.attachment == EarAttachment.CROSS_PATH

    def test_k5_is_other(self):
        assert classify_block(build_complete(5)).type == BlockType.OTHER

    def test_not_a_block(self, bowtie):
        with pytest.raises(NotABlockError):
            classify_block(bowtie)

    def test_single_vertex_not_a_block(self):
        with pytest.raises(NotABlockError):
            classify_block(Graph(1))

    def test_branch_endpoint_ear_under_each_rule(self):
        """Test the graph whose only theta-prime reading ends an ear at a branch vertex."""
        g = parse_graph6("DU{")

        relaxed = classify_block(g, endpoints='relaxed')
        assert relaxed.type == BlockType.THETA_PRIME
        assert relaxed.attachment == EarAttachment.BRANCH_ENDPOINT
        assert classify_block(g, endpoints='strict').type == BlockType.OTHER

    def test_strict_reading_preferred(self):
        """Test that a strict decomposition is reported when one exists."""
        kind = classify_block(parse_graph6("DVw"), endpoints='relaxed')

        assert kind.type == BlockType.THETA_PRIME
        assert kind.attachment != EarAttachment.BRANCH_ENDPOINT

    def test_unknown_rule_rejected(self, triangle):
        with pytest.raises(UnsupportedParameterError):
            classify_block(triangle, endpoints='loose')

    def test_to_dict(self, k4):
        payload = classify_block(k4).to_dict()

        assert payload['type'] == 'theta-prime'
        assert payload['theta'] == [1, 2, 2]
        assert payload['ear_length'] == 1
        assert payload['attachment'] == 'cross-path'

    def test_every_theta_recognized(self):
        for n in range(3, 9):
            assert classify_block(build_cycle(n)) == BlockKind(BlockType.CYCLE, length=n)
        for spec in theta_specs(8):
            assert classify_block(build_theta(spec)) == BlockKind(BlockType.THETA, theta=spec)

    def test_every_theta_prime_recognized(self):
        """Test that each constructed theta-prime is classified as one."""
        for realization in theta_prime_realizations(8, endpoints='relaxed'):
            assert classify_block(realization.graph).type == BlockType.THETA_PRIME

    def test_strict_realizations_recognized_strictly(self):
        for realization in theta_prime_realizations(7, endpoints='strict'):
            kind = classify_block(realization.graph, endpoints='strict')
            assert kind.type == BlockType.THETA_PRIME
            assert kind.attachment != EarAttachment.BRANCH_ENDPOINT


class TestThetaHelpers:
    """Test cases for theta recognition helpers."""

    def test_theta_spec_of(self):
        assert theta_spec_of(build_theta(ThetaSpec.of(2, 3, 1))) == ThetaSpec.of(1, 2, 3)

    def test_theta_spec_of_cycle(self, c5):
        assert theta_spec_of(c5) is None

    def test_theta_spec_of_k4(self, k4):
        assert theta_spec_of(k4) is None

    def test_maximal_chains_of_theta(self):
        chains = maximal_chains(build_theta(ThetaSpec.of(1, 2, 3)))
        assert sorted(len(chain) - 1 for chain in chains) == [1, 2, 3]


class TestAllowedIn:
    """Test cases for the per-k block catalog."""

    def test_edges_and_cycles_always_allowed(self):
        for k in range(1, 5):
            assert allowed_in(BlockKind(BlockType.EDGE), k)
            assert allowed_in(BlockKind(BlockType.CYCLE, length=5), k)

    def test_theta_path_limit(self):
        theta4 = BlockKind(BlockType.THETA, theta=ThetaSpec.of(1, 2, 2, 2))

        assert not allowed_in(theta4, 2)
        assert allowed_in(theta4, 3)
        assert allowed_in(theta4, 4)

    def test_theta_prime_only_at_four(self, k4):
        kind = classify_block(k4)

        assert not allowed_in(kind, 3)
        assert allowed_in(kind, 4)

    def test_other_never_allowed(self):
        assert not any(allowed_in(BlockKind(BlockType.OTHER), k) for k in range(1, 5))


class TestStructuralKCactus:
    """Test cases for structural_k_cactus."""

    def test_bowtie_is_cactus(self, bowtie):
        assert structural_k_cactus(bowtie, 1)

    def test_coalesced_thetas_are_2_cacti(self, theta122):
        g = coalesce(theta122, 2, theta122, 0)
        assert structural_k_cactus(g, 2)
        assert not structural_k_cactus(g, 1)

    def test_k4_with_pendant(self, k4_pendant):
        assert not structural_k_cactus(k4_pendant, 3)
        assert structural_k_cactus(k4_pendant, 4)

    def test_single_vertex(self):
        assert structural_k_cactus(Graph(1), 1)

    def test_k_range(self, triangle):
        with pytest.raises(UnsupportedParameterError):
            structural_k_cactus(triangle, 5)

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            structural_k_cactus(Graph(2), 1)

    def test_strict_rule_misses_branch_endpoint_ear(self):
        """Test that only the relaxed rule accepts the branch-endpoint 4-cactus."""
        g = parse_graph6("DU{")

        assert is_k_cactus(g, 4)
        assert structural_k_cactus(g, 4, endpoints='relaxed')
        assert not structural_k_cactus(g, 4, endpoints='strict')

    def test_block_kinds_in_block_order(self, k4_pendant):
        kinds = [kind.type for _, kind in block_kinds(k4_pendant)]
        assert kinds == [BlockType.THETA_PRIME, BlockType.EDGE]

    def test_default_rule_is_relaxed(self):
        assert resolve_endpoints(None) == 'relaxed'

    def test_theta_tilde_graphs_are_4_cacti(self):
        for g in theta_tilde():
            assert structural_k_cactus(g, 4)
            assert not structural_k_cactus(g, 3)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_matches_oracle_up_to_six_vertices(self, k):
        """Test structural recognition against the cycle-count oracle."""
        for n in range(1, 7):
            for g in enumerate_graphs(n, connected_only=True):
                assert structural_k_cactus(g, k) == is_k_cactus(g, k), str(g)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_matches_oracle_up_to_eight_vertices(self, k):
        for n in (7, 8):
            for g in enumerate_graphs(n, connected_only=True):
                assert structural_k_cactus(g, k) == is_k_cactus(g, k), str(g)
