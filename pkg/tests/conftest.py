"""Shared fixtures: small named graphs used across the test modules."""

import pytest

from core.construct import ThetaSpec, build_complete, build_cycle, build_theta
from core.graph import Graph


@pytest.fixture
def triangle():
    return build_complete(3)


@pytest.fixture
def k4():
    return build_complete(4)


@pytest.fixture
def c5():
    return build_cycle(5)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 2."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def theta122():
    return build_theta(ThetaSpec.of(1, 2, 2))


@pytest.fixture
def k4_pendant():
    """K4 with one pendant edge at vertex 3."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
