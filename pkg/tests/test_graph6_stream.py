"""Tests for graph6 stream reading."""

import io

import pytest

from core.graph import write_graph6
from utils.graph6_stream import Graph6StreamError, read_graph6_stream


class TestReadGraph6Stream:
    """Test cases for read_graph6_stream."""

    def test_line_numbers(self):
        stream = io.StringIO("Bw\n\nC~\n")
        read = [(number, write_graph6(g)) for number, g in read_graph6_stream(stream)]
        assert read == [(1, "Bw"), (3, "C~")]

    def test_header_skipped(self):
        stream = io.StringIO(">>graph6<<\nBw\n")
        assert [number for number, _ in read_graph6_stream(stream)] == [2]

    def test_surrounding_whitespace(self):
        stream = io.StringIO("  Bw \r\n")
        assert [write_graph6(g) for _, g in read_graph6_stream(stream)] == ["Bw"]

    def test_malformed_line_fails(self):
        stream = io.StringIO("Bw\nB\nC~\n")
        with pytest.raises(Graph6StreamError, match="line 2") as excinfo:
            list(read_graph6_stream(stream))
        assert excinfo.value.line_number == 2

    def test_lenient_skips_and_warns(self):
        warnings = []
        stream = io.StringIO("Bw\nB\nC~\n")

        read = list(read_graph6_stream(stream, lenient=True, warn=warnings.append))

        assert [number for number, _ in read] == [1, 3]
        assert len(warnings) == 1
        assert warnings[0].startswith("skipping line 2")

    def test_lenient_without_callback(self):
        stream = io.StringIO("B\n")
        assert list(read_graph6_stream(stream, lenient=True)) == []

    def test_unsupported_order_is_malformed(self):
        with pytest.raises(Graph6StreamError):
            list(read_graph6_stream(io.StringIO("~?A?\n")))
