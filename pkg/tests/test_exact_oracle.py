import pytest

from analysis.acyclic import verify_acyclic
from models.errors import SearchLimitExceeded
from models.graph import Graph
from solver import accepts, degeneracy_order, exact_acyclic_index, exact_color_small

from .conftest import random_planar


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    return Graph.from_edges([(0, i) for i in range(1, n + 1)])


K4 = Graph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])


@pytest.mark.parametrize(
    "graph,index",
    [
        (Graph.from_edges([(0, 1), (1, 2), (0, 2)]), 3),
        (K4, 5),
        (cycle_graph(5), 3),
        (cycle_graph(6), 3),
        (star(4), 4),
        (star(6), 6),
        (Graph.from_edges([(0, 1)]), 1),
    ],
    ids=["k3", "k4", "c5", "c6", "star4", "star6", "k2"],
)
def test_exact_index(graph, index):
    assert exact_acyclic_index(graph, 8) == index


def test_index_beyond_cap():
    assert exact_acyclic_index(K4, 4) is None


def test_c6_has_no_acyclic_two_coloring():
    assert exact_color_small(cycle_graph(6), 2) is None


def test_empty_graph_index():
    assert exact_acyclic_index(Graph(n=3, edges=()), 5) == 0


def test_exact_coloring_is_acyclic():
    coloring = exact_color_small(K4, 5)
    assert verify_acyclic(K4, coloring, 5).accepted
    assert accepts(K4, dict(coloring.items()), 5)


def test_node_limit():
    with pytest.raises(SearchLimitExceeded):
        exact_color_small(K4, 4, node_limit=5)


def test_degeneracy_order_puts_the_core_first():
    g = Graph.from_edges([(0, 1), (0, 2), (1, 2), (2, 3)])
    order = degeneracy_order(g)
    assert order[-1] == 3
    assert sorted(order) == [0, 1, 2, 3]


@pytest.mark.parametrize("seed", range(15))
def test_seven_colors_suffice_below_degree_five(seed):
    g = random_planar(seed, n=10)
    g = Graph(n=g.n, edges=tuple(e for e in g.edges if g.degree(e[0]) <= 4 and g.degree(e[1]) <= 4))
    coloring = exact_color_small(g, 7)
    assert coloring is not None
    assert verify_acyclic(g, coloring, 7).accepted


def test_accepts_checks_totality_and_range():
    g = Graph.from_edges([(0, 1), (1, 2)])
    assert accepts(g, {(0, 1): 1, (1, 2): 2}, 2)
    assert not accepts(g, {(0, 1): 1}, 2)
    assert not accepts(g, {(0, 1): 1, (1, 2): 3}, 2)
    assert not accepts(g, {(0, 1): 1, (2, 1): 1}, 2)
