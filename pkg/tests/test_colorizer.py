import logging
import random
import time

import pytest

from analysis.acyclic import verify_acyclic
from analysis.structure import block_decompose
from detectors import find_configuration
from generators import CorpusSpec, generate
from models.coloring import EdgeColoring
from models.errors import NoConfigurationError, PaletteTooSmallError
from models.extension import ColorizerState, ExtensionTrace
from models.graph import Graph
from solver import Colorizer, acyclic_color, attach_pendant, extend_coloring, merge_blocks, palette_for, rainbow
import solver.colorizer as colorizer_module
from solver.oracle import accepts


def test_palette_is_max_degree_plus_seven(icosahedron):
    assert palette_for(icosahedron.graph) == 12


def test_short_path_is_rainbow(path4):
    coloring = acyclic_color(path4)
    assert dict(coloring.items()) == {(0, 1): 1, (1, 2): 2, (2, 3): 3}


def test_rainbow_needs_enough_colors(k4):
    with pytest.raises(PaletteTooSmallError):
        rainbow(k4, 5)


def test_k4(k4):
    coloring = acyclic_color(k4)
    assert verify_acyclic(k4, coloring, 10).accepted


def test_icosahedron_within_twelve_colors(icosahedron):
    colorizer = Colorizer(icosahedron.graph)
    coloring = colorizer.run()
    assert coloring.max_color <= 12
    assert verify_acyclic(icosahedron.graph, coloring, 12).accepted
    assert accepts(icosahedron.graph, dict(coloring.items()), 12)
    assert len(colorizer.state.trace) > 0


def test_merge_two_triangles(two_triangles):
    tree = block_decompose(two_triangles)
    first = EdgeColoring(5, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    second = EdgeColoring(5, 3, {(2, 3): 1, (2, 4): 2, (3, 4): 3})
    merged = merge_blocks([first, second], tree, 6)
    assert verify_acyclic(two_triangles, merged, 6).accepted
    # the first block keeps its colors; the second moves off colors 2 and 3 at the cut vertex
    assert merged.color(0, 1) == 1 and merged.color(0, 2) == 2 and merged.color(1, 2) == 3
    assert {merged.color(2, 3), merged.color(2, 4)}.isdisjoint({2, 3})


def test_merge_needs_room_at_the_cut(two_triangles):
    tree = block_decompose(two_triangles)
    first = EdgeColoring(5, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    second = EdgeColoring(5, 3, {(2, 3): 1, (2, 4): 2, (3, 4): 3})
    with pytest.raises(PaletteTooSmallError):
        merge_blocks([first, second], tree, 3)


def random_block_tree(seed: int) -> Graph:
    """Triangles, squares and bridges glued at random cut vertices."""
    rng = random.Random(seed)
    edges = []
    n = 1
    for _ in range(rng.randint(3, 8)):
        anchor = rng.randrange(n)
        size = rng.choice([2, 3, 4])
        ring = [anchor] + list(range(n, n + size - 1))
        n += size - 1
        if size == 2:
            edges.append((ring[0], ring[1]))
        else:
            edges += [(ring[i], ring[(i + 1) % size]) for i in range(size)]
    return Graph.from_edges(edges, n=n)


@pytest.mark.parametrize("seed", range(25))
def test_random_block_trees(seed):
    g = random_block_tree(seed)
    coloring = acyclic_color(g)
    assert verify_acyclic(g, coloring, palette_for(g)).accepted


@pytest.mark.parametrize(
    "spec",
    [
        CorpusSpec("wheel", (12,)),
        CorpusSpec("grid", (5, 5)),
        CorpusSpec("prism", (8,)),
        CorpusSpec("stacked_triangulation", (30,), 1),
        CorpusSpec("stacked_triangulation", (60,), 2),
        CorpusSpec("subdivided", ("icosahedron", 6), 1),
        CorpusSpec("subdivided", ("wheel", 15, 4), 2),
        CorpusSpec("subdivided", ("stacked_triangulation", 40, 4), 3),
    ],
    ids=lambda s: s.name,
)
def test_corpus_members(spec):
    g = generate(spec).graph
    coloring = acyclic_color(g)
    assert coloring.max_color <= g.max_degree + 7
    assert verify_acyclic(g, coloring, g.max_degree + 7).accepted


def test_extension_step_records_trace(icosahedron):
    g = icosahedron.graph
    cfg = find_configuration(g)
    h = g.without_edge(*cfg.removal_edge)
    state = ColorizerState(graph=g, palette_size=12)
    c_h = Colorizer(h).run()
    extended = extend_coloring(state, cfg, EdgeColoring(g.n, 12, dict(c_h.items())))
    assert verify_acyclic(g, extended, 12).accepted
    assert len(state.trace) == 1
    step = state.trace.steps[0]
    assert ExtensionTrace.replay(step, c_h) == extended


def test_non_planar_input_without_configuration(caplog):
    # K_{6,6} is 2-connected with degree 6 everywhere and no reducible configuration
    g = Graph.from_edges([(a, 6 + b) for a in range(6) for b in range(6)])
    with caplog.at_level(logging.ERROR):
        with pytest.raises(NoConfigurationError):
            acyclic_color(g)
    assert "no configuration" in caplog.text


def test_strict_mode_verifies_every_step():
    g = generate(CorpusSpec("subdivided", ("icosahedron", 3), 4)).graph
    colorizer = Colorizer(g, strict=True)
    coloring = colorizer.run()
    assert verify_acyclic(g, coloring, colorizer.palette_size).accepted


def test_large_instance_peels_without_rebuilding(monkeypatch):
    g = generate(CorpusSpec("subdivided", ("stacked_triangulation", 290, 29), 3)).graph
    checks = []
    real_check = colorizer_module.is_biconnected_block

    def counted_check(h):
        checks.append(h.m)
        return real_check(h)

    monkeypatch.setattr(colorizer_module, "is_biconnected_block", counted_check)

    def no_rebuild(self, u, v):
        raise AssertionError("the peel loop rebuilt the graph")

    monkeypatch.setattr(Graph, "without_edge", no_rebuild)
    start = time.perf_counter()
    colorizer = Colorizer(g)
    coloring = colorizer.run()
    elapsed = time.perf_counter() - start
    assert verify_acyclic(g, coloring, colorizer.palette_size).accepted
    # full 2-connectivity tests run per piece, not per deletion
    assert len(checks) < g.m // 4
    assert elapsed < 30


@pytest.mark.parametrize("spec", [CorpusSpec("stacked_triangulation", (120,), 4), CorpusSpec("subdivided", ("icosahedron", 6), 2)], ids=lambda s: s.name)
def test_same_input_gives_identical_colorings_and_traces(spec):
    g = generate(spec).graph
    runs = [Colorizer(g) for _ in range(2)]
    colorings = [c.run() for c in runs]
    assert list(colorings[0].items()) == list(colorings[1].items())
    first, second = (c.state.trace for c in runs)
    assert [s.to_dict() for s in first.steps] == [s.to_dict() for s in second.steps]


def test_pendant_edge_takes_the_smallest_color_missing_at_its_anchor():
    coloring = EdgeColoring(5, 10, {(0, 1): 1, (0, 2): 2, (0, 3): 4})
    attach_pendant(coloring, 4, 0)
    assert coloring.color(0, 4) == 3
    full = EdgeColoring(4, 2, {(0, 1): 1, (0, 2): 2})
    with pytest.raises(PaletteTooSmallError):
        attach_pendant(full, 3, 0)
