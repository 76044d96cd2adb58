"""Shared graph fixtures."""

import random

import pytest

from generators import get_generator
from models.graph import Graph


def random_planar(seed: int, n: int = 12) -> Graph:
    """A stacked triangulation thinned to a random spanning subgraph."""
    rng = random.Random(seed)
    base = get_generator("stacked_triangulation").generate((n,), seed=seed).graph
    kept = [e for e in base.edges if rng.random() < 0.7]
    return Graph(n=base.n, edges=tuple(kept))


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> Graph:
    return get_generator("complete").generate((4,)).graph


@pytest.fixture
def k4_minus_edge() -> Graph:
    return Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2)])


@pytest.fixture
def path4() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c6() -> Graph:
    return Graph.from_edges([(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def icosahedron():
    return get_generator("icosahedron").generate()


@pytest.fixture
def cube():
    return get_generator("prism").generate((4,))


@pytest.fixture
def tetrahedron():
    return get_generator("complete").generate((4,))


@pytest.fixture
def wheel6():
    return get_generator("wheel").generate((6,))


@pytest.fixture
def two_triangles() -> Graph:
    """Two triangles sharing the cut vertex 2."""
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
