import pytest

from analysis.acyclic import verify_acyclic
from detectors import DETECTOR_BY_KIND, check_configuration, find_configuration
from extenders import A1Extender, EXTENDERS, FallbackSearch, extend_coloring, fallback_extend
from models.coloring import EdgeColoring
from models.configuration import ConfigKind, Configuration
from models.errors import BranchMismatchError, ExtensionFailedError
from models.extension import Recolor
from models.graph import Graph
from solver import acyclic_color, exact_color_small

from .conftest import random_planar


@pytest.fixture
def square():
    """C4 0-1-2-3 with uv = 01 uncolored and v = 1 a 2-vertex."""
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3)])
    cfg = Configuration(ConfigKind.A1, {"u": 0, "v": 1, "w": 2}, (0, 1))
    coloring = EdgeColoring(4, 3, {(0, 3): 1, (1, 2): 1, (2, 3): 2})
    return g, cfg, coloring


def test_every_kind_has_an_extender():
    assert set(EXTENDERS) == set(ConfigKind)


def test_a1_picks_a_color_without_a_path(square):
    g, cfg, coloring = square
    extended, step = extend_coloring(g, cfg, coloring, 3)
    # color 2 would close the (1, 2)-cycle 0-1-2-3
    assert extended.color(0, 1) == 3
    assert step.kind == "A1"
    assert step.branch == "no (c(vw), a)-path from w to u1"
    assert step.operations == [Recolor(0, 1, None, 3)]
    assert verify_acyclic(g, extended, 3).accepted
    assert coloring.color(0, 1) is None


def test_a1_without_room_is_a_branch_mismatch(square):
    g, cfg, coloring = square
    with pytest.raises(BranchMismatchError) as excinfo:
        extend_coloring(g, cfg, coloring, 2)
    assert excinfo.value.kind == "A1"


def test_journal_rolls_back(square):
    g, cfg, coloring = square
    extender = A1Extender(g, cfg, coloring, 3)
    mark = extender.mark()
    assert extender.apply("recolor", [((2, 3), 3)])
    assert extender.color(2, 3) == 3
    extender.rollback(mark)
    assert extender.color(2, 3) == 2
    # a clash at vertex 2 is refused outright
    assert not extender.apply("clash", [((2, 3), 1)])
    assert extender.color(2, 3) == 2


def test_extension_reaches_k4(k4):
    cfg = find_configuration(k4)
    h = k4.without_edge(*cfg.removal_edge)
    coloring = exact_color_small(h, 10)
    extended, step = extend_coloring(k4, cfg, coloring, 10)
    assert verify_acyclic(k4, extended, 10).accepted
    assert step.removal_edge == (0, 1)
    assert any((op.u, op.v, op.before) == (0, 1, None) for op in step.operations)


def test_a2_extension_between_two_hubs():
    g = Graph.from_edges([(hub, x) for hub in (0, 1) for x in range(2, 12)])
    cfg = find_configuration(g)
    assert cfg.kind == ConfigKind.A2_1
    assignment = {(0, x): x - 1 for x in range(3, 12)}
    assignment.update({(1, x): x for x in range(3, 12)})
    assignment[(1, 2)] = 1
    coloring = EdgeColoring(g.n, 17, assignment)
    extended, step = extend_coloring(g, cfg, coloring, 17)
    assert verify_acyclic(g, extended, 17).accepted
    assert step.kind == "A2_1"


def test_a4_extension_on_icosahedron(icosahedron):
    g = icosahedron.graph
    cfg = find_configuration(g)
    h = g.without_edge(*cfg.removal_edge)
    coloring = exact_color_small(h, 12)
    extended, step = extend_coloring(g, cfg, coloring, 12, strict=True)
    assert verify_acyclic(g, extended, 12).accepted
    assert step.kind == "A4_2"


def test_fallback_needs_radius_to_recolor_a_blocker(path4):
    coloring = EdgeColoring(4, 2, {(0, 1): 1, (2, 3): 2})
    with pytest.raises(ExtensionFailedError):
        fallback_extend(path4, (1, 2), coloring, 2, radius=0)
    extended, step = fallback_extend(path4, (1, 2), coloring, 2, radius=2)
    assert verify_acyclic(path4, extended, 2).accepted
    assert step.fallback
    assert step.operations[0] == Recolor(1, 2, None, extended.color(1, 2))
    assert len(step.operations) == 2


def test_fallback_cannot_beat_two_colors_on_a_square(square):
    g, _, coloring = square
    small = EdgeColoring(4, 2, dict(coloring.items()))
    search = FallbackSearch(g, (0, 1), small, 2, radius=6)
    assert search.run() is None


def test_a3_1_trades_the_shared_color_between_the_ends():
    # u=0, v=1, u1=2, u2=3, v1=4; C(u1) = C(v1) = {1, 9..15} blocks every free color
    edges = [(0, 1), (0, 2), (0, 3), (1, 4)] + [(1, 5 + k) for k in range(6)]
    assignment = {(0, 2): 1, (0, 3): 2, (1, 4): 1}
    assignment.update({(1, 5 + k): 3 + k for k in range(6)})
    for j in range(9, 16):
        a, b = 11 + 2 * (j - 9), 12 + 2 * (j - 9)
        edges += [(2, a), (a, b), (4, b)]
        assignment.update({(2, a): j, (a, b): 1, (4, b): j})
    g = Graph.from_edges(edges)
    cfg = Configuration(ConfigKind.A3_1, {"u": 0, "v": 1, "u1": 2, "u2": 3}, (0, 1))
    assert check_configuration(g, cfg)
    assert g.degree(1) == 8 and g.max_degree + 7 == 15
    coloring = EdgeColoring(g.n, 15, {e: c for e, c in assignment.items() if e != (0, 1)})

    extended, step = extend_coloring(g, cfg, coloring, 15)
    assert step.branch == "A3.1: uu_1 into C(v), vv_1 takes c(uu_2), uv takes c(uu_1)"
    assert (extended.color(0, 2), extended.color(1, 4), extended.color(0, 1)) == (3, 2, 1)
    assert verify_acyclic(g, extended, 15).accepted


def test_a2_2_borrows_a_high_color_for_vw():
    # u=0 with the 2-neighbor v=1 (w=2) and eight neighbors of degree 9
    edges = [(0, 1), (1, 2)] + [(0, h) for h in range(3, 11)]
    assignment = {(1, 2): 1}
    assignment.update({(0, h): h - 2 for h in range(3, 11)})
    for a in range(9, 17):
        x, y = a + 2, a + 10
        edges += [(3, x), (x, y), (2, y)]
        assignment.update({(3, x): a, (x, y): 1, (2, y): a})
    leaf = 27
    for h in range(4, 11):
        for a in range(9, 17):
            edges.append((h, leaf))
            assignment[(h, leaf)] = a
            leaf += 1
    g = Graph.from_edges(edges)
    cfg = DETECTOR_BY_KIND[ConfigKind.A2_2].match_at(g, 0)
    assert cfg is not None and cfg.removal_edge == (0, 1)

    extended, step = extend_coloring(g, cfg, EdgeColoring(g.n, 16, assignment), 16)
    assert step.kind == "A2_2"
    # every color outside C(u) closes a cycle through u_1 = 3, so vw gives up c(vw)
    assert step.branch == "(*2.2) fails: vw takes c(uu_i), uv takes j"
    assert (extended.color(1, 2), extended.color(0, 1)) == (2, 9)
    assert verify_acyclic(g, extended, 16).accepted


def test_a3_2_recolors_the_other_edge_at_u():
    # v=0 of degree 9; u=1 with u2=2 a common neighbor carrying the shared color on uu_2
    edges = [(0, k) for k in range(1, 10)] + [(1, 2), (1, 10)]
    assignment = {(0, k): k for k in range(2, 10)}
    assignment.update({(1, 2): 3, (1, 10): 1})
    g = Graph.from_edges(edges)
    cfg = Configuration(ConfigKind.A3_2, {"u": 1, "v": 0, "u1": 10, "u2": 2}, (1, 0))
    assert check_configuration(g, cfg)

    extended, step = extend_coloring(g, cfg, EdgeColoring(g.n, 9, assignment), 9)
    assert step.branch == "(3.2.2): recolor uu_1, uv takes c(uu_1)"
    assert (extended.color(1, 10), extended.color(0, 1)) == (4, 1)
    assert verify_acyclic(g, extended, 9).accepted


def test_a3_3_moves_uu_2_into_c_v():
    # u=1 and both its other neighbors are adjacent to v=0 of degree 10
    edges = [(0, k) for k in range(1, 11)] + [(1, 2), (1, 3), (2, 3)]
    assignment = {(0, k): k for k in range(4, 11)}
    assignment.update({(0, 2): 2, (0, 3): 1, (1, 2): 1, (1, 3): 3, (2, 3): 11})
    g = Graph.from_edges(edges)
    cfg = Configuration(ConfigKind.A3_3, {"u": 1, "v": 0, "u1": 2, "u2": 3}, (1, 0))
    assert check_configuration(g, cfg)

    extended, step = extend_coloring(g, cfg, EdgeColoring(g.n, 11, assignment), 11)
    assert step.branch == "(3.3.1): c(vu_2) shared, uu_2 into C(v), uv takes c(uu_2)"
    assert (extended.color(1, 3), extended.color(0, 1)) == (4, 3)
    assert verify_acyclic(g, extended, 11).accepted


def test_a4_1_case_one_swaps_both_ends():
    # v=0 of degree 4, u=1; the only free color 6 closes u-5-2-v
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (2, 5)]
    assignment = {(0, 2): 1, (0, 3): 4, (0, 4): 5, (1, 5): 1, (1, 6): 2, (1, 7): 3, (2, 5): 6}
    leaves = {2: (4, 5), 3: (1, 2, 3), 4: (1, 2, 3)}
    leaf = 8
    for hub, colors in leaves.items():
        for c in colors:
            edges.append((hub, leaf))
            assignment[(hub, leaf)] = c
            leaf += 1
    g = Graph.from_edges(edges)
    cfg = DETECTOR_BY_KIND[ConfigKind.A4_1].match_at(g, 0)
    assert cfg is not None and cfg.removal_edge == (1, 0)

    extended, step = extend_coloring(g, cfg, EdgeColoring(g.n, 6, assignment), 6)
    assert step.branch == "Case 1: uu_1 into C(v), vw_1 into C(u), uv takes c(uu_1)"
    assert (extended.color(1, 5), extended.color(0, 2), extended.color(0, 1)) == (4, 2, 1)
    assert verify_acyclic(g, extended, 6).accepted


def test_seeded_extensions_never_miss_a_branch():
    kinds = set()
    for seed in range(500):
        g = random_planar(seed)
        cfg = find_configuration(g)
        if cfg is None:
            continue
        palette = g.max_degree + 7
        h = g.without_edge(*cfg.removal_edge)
        c_h = EdgeColoring(g.n, palette, dict(acyclic_color(h).items()))
        extended, step = extend_coloring(g, cfg, c_h, palette)
        assert verify_acyclic(g, extended, palette).accepted, f"seed {seed}: {step.branch}"
        kinds.add(step.kind)
    assert kinds
