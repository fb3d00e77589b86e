"""Tests for the graph value type, graph6 codec and canonical forms."""

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from core.construct import ThetaSpec, build_complete, build_cycle, build_theta
from core.graph import (
    CanonicalForm,
    Graph,
    Graph6ParseError,
    GraphError,
    UnsupportedSizeError,
    canonical_form,
    canonical_graph,
    is_connected,
    parse_graph6,
    write_graph6,
)
from tests.strategies import graphs, relabelings


class TestGraph:
    """Test cases for the Graph value type."""

    def test_from_edges_normalizes_pairs(self):
        """Test that edges are stored as (min, max) pairs."""
        g = Graph.from_edges(3, [(2, 0), (1, 2)])

        assert g.edges == frozenset({(0, 2), (1, 2)})
        assert g.size == 2
        assert g.has_edge(0, 2)
        assert g.has_edge(2, 0)
        assert not g.has_edge(0, 1)

    def test_self_loop_rejected(self):
        """Test that self-loops are rejected."""
        with pytest.raises(GraphError, match="Self-loop"):
            Graph.from_edges(3, [(1, 1)])

    def test_duplicate_edge_rejected(self):
        """Test that repeated edges are rejected in either orientation."""
        with pytest.raises(GraphError, match="Duplicate"):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_out_of_range_edge_rejected(self):
        """Test that endpoints must be vertices."""
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 3)])

    def test_order_above_64_rejected(self):
        """Test the n <= 64 limit."""
        with pytest.raises(UnsupportedSizeError):
            Graph(65)

    def test_degrees_and_neighbors(self, bowtie):
        """Test degree queries on the bowtie."""
        assert bowtie.degrees() == [2, 2, 4, 2, 2]
        assert bowtie.neighbors(2) == [0, 1, 3, 4]

    def test_equality_ignores_construction_order(self):
        """Test that graphs compare by vertex count and edge set."""
        assert Graph.from_edges(3, [(0, 1), (1, 2)]) == Graph.from_edges(3, [(2, 1), (1, 0)])

    def test_networkx_round_trip(self, k4_pendant):
        """Test conversion to and from networkx."""
        assert Graph.from_networkx(k4_pendant.to_networkx()) == k4_pendant

    def test_relabel_requires_permutation(self, triangle):
        """Test that relabel rejects non-permutations."""
        with pytest.raises(GraphError):
            triangle.relabel([0, 0, 1])


class TestGraph6:
    """Test cases for graph6 encoding and decoding."""

    def test_single_vertex(self):
        assert parse_graph6("@") == Graph(1)
        assert write_graph6(Graph(1)) == "@"

    def test_k4(self, k4):
        assert parse_graph6("C~") == k4
        assert write_graph6(k4) == "C~"

    def test_triangle(self, triangle):
        assert parse_graph6("Bw") == triangle
        assert write_graph6(triangle) == "Bw"

    def test_c5(self, c5):
        """Test the hand-encoded 5-cycle."""
        assert write_graph6(c5) == "Dhc"
        assert parse_graph6("Dhc") == c5

    def test_empty_graph(self):
        assert parse_graph6("?") == Graph(0)

    def test_header_prefix_accepted(self, k4):
        assert parse_graph6(">>graph6<<C~") == k4

    def test_long_header_for_63_vertices(self):
        """Test the four-byte header used above 62 vertices."""
        line = write_graph6(Graph(63))

        assert line.startswith("~??~")
        assert parse_graph6(line) == Graph(63)

    def test_64_vertices_round_trip(self):
        """Test the largest supported order."""
        g = Graph.from_edges(64, [(i, i + 1) for i in range(63)])

        assert parse_graph6(write_graph6(g)) == g

    def test_truncated_bit_field(self):
        """Test that a missing body character is reported."""
        with pytest.raises(Graph6ParseError, match="Truncated"):
            parse_graph6("C")

    def test_trailing_data(self):
        with pytest.raises(Graph6ParseError, match="trailing"):
            parse_graph6("Bww")

    def test_out_of_range_character_names_offset(self):
        """Test that the offending byte offset is reported."""
        with pytest.raises(Graph6ParseError) as excinfo:
            parse_graph6("B w")

        assert excinfo.value.offset == 1
        assert "byte offset 1" in str(excinfo.value)

    def test_empty_line(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("   ")

    def test_order_above_64_unsupported(self):
        """Test that long headers beyond 64 vertices are refused."""
        with pytest.raises(UnsupportedSizeError):
            parse_graph6("~?A?")

    @given(graphs(min_n=0, max_n=10))
    def test_round_trip(self, g):
        """Test parse_graph6(write_graph6(g)) == g."""
        assert parse_graph6(write_graph6(g)) == g


class TestConnectivity:
    """Test cases for is_connected."""

    def test_empty_graph_not_connected(self):
        assert not is_connected(Graph(0))

    def test_single_vertex_connected(self):
        assert is_connected(Graph(1))

    def test_two_disjoint_triangles(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_connected(g)

    def test_bowtie(self, bowtie):
        assert is_connected(bowtie)

    @given(graphs(max_n=8))
    def test_agrees_with_networkx(self, g):
        assert is_connected(g) == nx.is_connected(g.to_networkx())


class TestCanonicalForm:
    """Test cases for canonical labels."""

    def test_relabelings_of_c5(self, c5):
        """Test that every relabeling of C5 shares one label."""
        labels = {canonical_form(c5.relabel(perm)) for perm in itertools.permutations(range(5))}
        assert len(labels) == 1

    def test_k4_and_theta_differ(self, k4, theta122):
        assert canonical_form(k4) != canonical_form(theta122)

    def test_two_labelings_of_path(self):
        """Test that both labelings of P3 give one label."""
        middle_zero = Graph.from_edges(3, [(0, 1), (0, 2)])
        middle_one = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert canonical_form(middle_zero) == canonical_form(middle_one)

    def test_theta222_is_k23(self):
        """Test that theta(2,2,2) and K_{2,3} share a canonical form."""
        k23 = Graph.from_networkx(nx.complete_bipartite_graph(2, 3))
        assert canonical_form(build_theta(ThetaSpec.of(2, 2, 2))) == canonical_form(k23)

    def test_label_is_graph6_of_canonical_graph(self, bowtie):
        """Test that the label decodes to an isomorphic graph."""
        form = canonical_form(bowtie)
        representative = canonical_graph(bowtie)

        assert isinstance(form, CanonicalForm)
        assert write_graph6(representative) == str(form)
        assert nx.is_isomorphic(representative.to_networkx(), bowtie.to_networkx())

    def test_four_vertex_classes(self):
        """Test that all 64 edge subsets on 4 vertices fall into 11 classes."""
        pairs = list(itertools.combinations(range(4), 2))
        labels = set()
        for mask in range(1 << len(pairs)):
            chosen = [pair for i, pair in enumerate(pairs) if mask >> i & 1]
            labels.add(canonical_form(Graph.from_edges(4, chosen)))
        assert len(labels) == 11

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            canonical_form(build_cycle(11))

    def test_explicit_cap(self):
        """Test that a raised cap lifts the default limit."""
        assert canonical_form(build_cycle(11), cap=11) == canonical_form(build_cycle(11).relabel(
            [(v + 3) % 11 for v in range(11)]), cap=11)

    @settings(max_examples=100)
    @given(relabelings(max_n=8))
    def test_permutation_invariance(self, case):
        g, perm = case
        assert canonical_form(g.relabel(perm)) == canonical_form(g)

    @settings(max_examples=100)
    @given(graphs(min_n=5, max_n=7), graphs(min_n=5, max_n=7))
    def test_equal_forms_iff_isomorphic(self, first, second):
        """Test canonical forms against networkx isomorphism."""
        same = canonical_form(first) == canonical_form(second)
        assert same == nx.is_isomorphic(first.to_networkx(), second.to_networkx())

    def test_complete_graph_fixed_point(self):
        """Test that K5 is its own canonical representative."""
        assert canonical_graph(build_complete(5)) == build_complete(5)
