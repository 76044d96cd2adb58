import networkx as nx
import pytest

from analysis.structure import (
    block_decompose,
    build_graph,
    degree_census,
    enumerate_faces,
    is_biconnected_block,
    joined_by_two_paths,
    strip_two_vertices,
)
from generators import get_generator
from models.embedding import PlaneEmbedding
from models.errors import EmbeddingError, ParallelEdgeError, SelfLoopError, VertexRangeError
from models.graph import Graph, PeelGraph

from .conftest import random_planar


def test_build_graph_normalizes_and_sorts():
    g = build_graph([(2, 1), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.neighbors(2) == (0, 1)
    assert g.edge_id(2, 1) == 2
    assert g.max_degree == 2


@pytest.mark.parametrize(
    "edges,error",
    [
        ([(0, 0)], SelfLoopError),
        ([(0, 1), (1, 0)], ParallelEdgeError),
        ([(0, -1)], VertexRangeError),
    ],
)
def test_build_graph_rejects_non_simple_input(edges, error):
    with pytest.raises(error):
        build_graph(edges)


def test_vertex_beyond_declared_count():
    with pytest.raises(VertexRangeError):
        build_graph([(0, 5)], n=3)


def test_empty_graph():
    g = build_graph([], n=3)
    assert g.m == 0
    assert g.max_degree == 0
    assert len(g.components()) == 3


def test_icosahedron_faces(icosahedron):
    faces = enumerate_faces(icosahedron.graph, icosahedron.embedding)
    assert len(faces) == 20
    assert {f.degree for f in faces} == {3}


def test_wheel_faces(wheel6):
    faces = enumerate_faces(wheel6.graph, wheel6.embedding)
    assert sorted(f.degree for f in faces) == [3] * 6 + [6]


def test_cube_faces(cube):
    faces = enumerate_faces(cube.graph, cube.embedding)
    assert sorted(f.degree for f in faces) == [4] * 6


def test_isolated_vertex_has_an_empty_face():
    g = Graph(n=3, edges=((0, 1),))
    emb = PlaneEmbedding(rotation=((1,), (0,), ()))
    faces = enumerate_faces(g, emb)
    assert faces[0].isolated_vertex == 2
    assert faces[0].degree == 0
    assert faces[1].degree == 2


def test_non_planar_rotation_fails_euler_check(k4):
    # ascending rotations give K4 only two faces (a torus embedding)
    emb = PlaneEmbedding(rotation=((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)))
    with pytest.raises(EmbeddingError, match="Euler"):
        enumerate_faces(k4, emb)


def test_rotation_must_match_neighbors(k4):
    emb = PlaneEmbedding(rotation=((1, 2), (0, 2, 3), (0, 1, 3), (0, 1, 2)))
    with pytest.raises(EmbeddingError):
        enumerate_faces(k4, emb)


def test_degree_census(wheel6):
    hub = degree_census(wheel6.graph, 0)
    assert hub.counts == {3: 6}
    assert hub.n_plus(3) == 6
    assert hub.n_minus(2) == 0
    rim = degree_census(wheel6.graph, 1)
    assert rim.n(6) == 1
    assert rim.n(3) == 2


def test_strip_subdivided_k4():
    g = Graph.from_edges([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])
    stripped = strip_two_vertices(g)
    assert stripped.removed == (4,)
    assert len(stripped.components) == 1
    assert stripped.degree(0) == 3
    assert stripped.degree_h(0) == 2
    assert stripped.degree_drops() == [0, 1]
    with pytest.raises(KeyError):
        stripped.degree_h(4)


def test_strip_is_a_single_pass(path4):
    stripped = strip_two_vertices(path4)
    assert stripped.removed == (1, 2)
    # the leaves stay and become isolated components
    assert [c.to_original for c in stripped.components] == [(0,), (3,)]
    assert stripped.census_h(0).total == 0


def test_block_decompose_two_triangles(two_triangles):
    tree = block_decompose(two_triangles)
    assert tree.blocks == (((0, 1), (0, 2), (1, 2)), ((2, 3), (2, 4), (3, 4)))
    assert tree.cut_vertices == frozenset({2})
    assert tree.order == (0, 1)
    assert tree.attachment == (None, 2)
    assert tree.blocks_at(2) == [0, 1]


@pytest.mark.parametrize("seed", range(20))
def test_blocks_match_networkx(seed):
    g = random_planar(seed)
    tree = block_decompose(g)
    expected = list(nx.biconnected_component_edges(g.to_networkx()))
    assert len(tree) == len(expected)
    assert sorted(e for block in tree.blocks for e in block) == list(g.edges)
    assert tree.cut_vertices == frozenset(nx.articulation_points(g.to_networkx()))


def test_is_biconnected_block(k4, two_triangles, path4):
    assert is_biconnected_block(k4)
    assert not is_biconnected_block(two_triangles)
    assert not is_biconnected_block(path4)
    assert is_biconnected_block(Graph.from_edges([(3, 5)]))


def test_stripped_component_lookup():
    g = Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)])
    stripped = strip_two_vertices(g)
    assert len(stripped.components) == 2
    assert stripped.component_of(0) != stripped.component_of(8)
    with pytest.raises(KeyError):
        stripped.component_of(4)


def test_peel_graph_deletes_and_restores(wheel6):
    g = wheel6.graph
    working = PeelGraph(g)
    assert working.max_degree == 6 and working.m == g.m
    working.remove_edge(0, 3)
    assert not working.has_edge(3, 0)
    assert working.degree(0) == 5 and working.max_degree == 5
    assert working.m == g.m - 1
    assert working.freeze() == g.without_edge(0, 3)
    with pytest.raises(KeyError):
        working.remove_edge(0, 3)
    working.add_edge(3, 0)
    assert working.neighbors(0) == g.neighbors(0)
    assert working.freeze() == g
    with pytest.raises(KeyError):
        working.add_edge(0, 3)


def test_two_paths_on_a_cycle_and_a_chorded_cycle(c6):
    assert joined_by_two_paths(c6, 0, 3)
    working = PeelGraph(c6)
    working.remove_edge(0, 1)
    assert not joined_by_two_paths(working, 0, 1)
    chorded = PeelGraph(Graph.from_edges([(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]))
    chorded.remove_edge(0, 1)
    assert not joined_by_two_paths(chorded, 0, 1)
    chorded.remove_edge(0, 3)
    chorded.add_edge(0, 1)
    chorded.remove_edge(1, 2)
    assert not joined_by_two_paths(chorded, 1, 2)


def test_two_paths_needs_more_than_one_route(two_triangles, k4):
    assert not joined_by_two_paths(two_triangles, 0, 3)
    assert joined_by_two_paths(two_triangles, 0, 1)
    assert joined_by_two_paths(k4, 0, 1)
    assert not joined_by_two_paths(Graph.from_edges([(0, 1), (2, 3)]), 0, 3)


@pytest.mark.parametrize("seed", range(20))
def test_two_paths_agree_with_biconnectivity_after_a_deletion(seed):
    g = random_planar(seed, n=16)
    if not is_biconnected_block(g) or g.m < 4:
        g = get_generator("stacked_triangulation").generate((16,), seed=seed).graph
    for u, v in g.edges:
        working = PeelGraph(g)
        working.remove_edge(u, v)
        assert joined_by_two_paths(working, u, v) == is_biconnected_block(working.freeze())
