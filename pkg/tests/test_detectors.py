import pytest

from analysis.structure import is_biconnected_block
from detectors import DETECTOR_BY_KIND, check_configuration, configuration_index, find_configuration
from generators import CorpusSpec, generate, get_generator
from models.configuration import ConfigKind, Configuration
from models.errors import MalformedWitnessError
from models.graph import Graph, PeelGraph


def wheel(k: int) -> Graph:
    return get_generator("wheel").generate((k,)).graph


def octahedron() -> Graph:
    opposite = {(0, 5), (1, 3), (2, 4)}
    return Graph.from_edges([(a, b) for a in range(6) for b in range(a + 1, 6) if (a, b) not in opposite])


def padded(degrees, edges):
    """Add leaves until each listed vertex reaches its target degree."""
    edges = list(edges)
    current = {}
    for a, b in edges:
        current[a] = current.get(a, 0) + 1
        current[b] = current.get(b, 0) + 1
    fresh = max(max(e) for e in edges) + 1
    for vertex, target in sorted(degrees.items()):
        for _ in range(target - current.get(vertex, 0)):
            edges.append((vertex, fresh))
            fresh += 1
    return Graph.from_edges(edges)


def test_path_gives_a1(path3):
    cfg = find_configuration(path3)
    assert cfg.kind == ConfigKind.A1
    assert cfg.witness == {"u": 0, "v": 1, "w": 2}
    assert cfg.removal_edge == (0, 1)


def test_k4_gives_a3_1(k4):
    cfg = find_configuration(k4)
    assert cfg.kind == ConfigKind.A3_1
    assert cfg.witness == {"u": 0, "v": 1, "u1": 2, "u2": 3}
    assert cfg.removal_edge == (0, 1)


def test_icosahedron_gives_a4_2(icosahedron):
    cfg = find_configuration(icosahedron.graph)
    assert cfg.kind == ConfigKind.A4_2
    assert cfg["v"] == 0
    assert cfg["disjunct"] == 1
    assert check_configuration(icosahedron.graph, cfg)


def test_icosahedron_has_no_a1(icosahedron):
    cfg = Configuration(ConfigKind.A1, {"u": 0, "v": 1, "w": 2}, (0, 1))
    assert not check_configuration(icosahedron.graph, cfg)
    assert DETECTOR_BY_KIND[ConfigKind.A1].find(icosahedron.graph) is None


def test_subdivided_icosahedron_gives_a1():
    g = generate(CorpusSpec("subdivided", ("icosahedron", 1))).graph
    cfg = find_configuration(g)
    assert cfg.kind == ConfigKind.A1
    assert cfg["v"] == 12
    assert g.degree(cfg["u"]) == 5


def test_star_has_no_configuration():
    star = Graph.from_edges([(0, i) for i in range(1, 6)])
    assert find_configuration(star) is None


def test_wheel_rim_pair_is_a3_1():
    g = wheel(6)
    cfg = Configuration(ConfigKind.A3_1, {"u": 1, "v": 2, "u1": 0, "u2": 6}, (1, 2))
    assert check_configuration(g, cfg)


def test_two_vertices_between_high_degree_hubs_give_a2_1():
    # K_{2,10}: every 2-vertex sits between two 10-vertices, so A1 never applies
    g = Graph.from_edges([(hub, x) for hub in (0, 1) for x in range(2, 12)])
    assert DETECTOR_BY_KIND[ConfigKind.A1].find(g) is None
    cfg = find_configuration(g)
    assert cfg.kind == ConfigKind.A2_1
    assert (cfg["u"], cfg["v"], cfg["w"]) == (0, 2, 1)
    assert cfg["neighbors"] == tuple(range(3, 12))
    assert cfg["far"] == {x: 1 for x in range(3, 12)}
    assert check_configuration(g, cfg)


def test_a3_2_on_nine_wheel():
    g = wheel(9)
    cfg = Configuration(ConfigKind.A3_2, {"u": 1, "v": 0, "u1": 2, "u2": 9}, (1, 0))
    assert check_configuration(g, cfg)
    low = Configuration(ConfigKind.A3_1, dict(cfg.witness), (1, 0))
    assert not check_configuration(g, low)


def test_a3_3_on_ten_wheel():
    g = wheel(10)
    cfg = Configuration(ConfigKind.A3_3, {"u": 1, "v": 0, "u1": 2, "u2": 10}, (1, 0))
    assert check_configuration(g, cfg)


def test_octahedron_gives_a4_1():
    g = octahedron()
    cfg = find_configuration(g)
    assert cfg.kind == ConfigKind.A4_1
    assert cfg.witness == {"v": 0, "u": 1, "others": (2, 3, 4), "disjunct": 1}
    assert cfg.removal_edge == (1, 0)


def test_a4_2_second_disjunct():
    spokes = [(0, x) for x in range(1, 6)]
    g = padded({1: 6, 2: 6, 3: 7, 4: 7, 5: 7}, spokes + [(1, 5)])
    cfg = find_configuration(g)
    assert cfg.kind == ConfigKind.A4_2
    assert cfg["disjunct"] == 2
    assert cfg["u"] == 1
    assert cfg["others"][-1] == 5
    assert check_configuration(g, cfg)


def test_malformed_witness(k4):
    with pytest.raises(MalformedWitnessError):
        check_configuration(k4, Configuration(ConfigKind.A1, {"u": 0, "v": 1}, (0, 1)))
    with pytest.raises(MalformedWitnessError):
        check_configuration(k4, Configuration(ConfigKind.A1, {"u": 0, "v": 1, "w": 9}, (0, 1)))


def test_configuration_dict_round_trip():
    g = Graph.from_edges([(hub, x) for hub in (0, 1) for x in range(2, 12)])
    cfg = find_configuration(g)
    assert Configuration.from_dict(cfg.to_dict()) == cfg


CORPUS = (
    [CorpusSpec("stacked_triangulation", (n,), seed) for n in (12, 30, 60) for seed in (1, 2, 3)]
    + [CorpusSpec("subdivided", ("icosahedron", e), seed) for e in (2, 5) for seed in (1, 2)]
    + [CorpusSpec("subdivided", ("stacked_triangulation", 40, 4), seed) for seed in (1, 2)]
    + [CorpusSpec("wheel", (k,)) for k in (5, 9, 12)]
    + [CorpusSpec("icosahedron")]
)


@pytest.mark.parametrize("spec", CORPUS, ids=lambda s: s.name)
def test_every_two_connected_instance_has_a_configuration(spec):
    g = generate(spec).graph
    assert is_biconnected_block(g) and g.max_degree >= 5
    cfg = find_configuration(g)
    assert cfg is not None
    assert check_configuration(g, cfg)
    assert find_configuration(g) == cfg


PEELED = [
    CorpusSpec("stacked_triangulation", (40,), 2),
    CorpusSpec("subdivided", ("stacked_triangulation", 30, 5), 1),
    CorpusSpec("subdivided", ("icosahedron", 4), 3),
    CorpusSpec("wheel", (11,)),
]


@pytest.mark.parametrize("spec", PEELED, ids=lambda s: s.name)
def test_index_matches_a_full_scan_while_peeling(spec):
    working = PeelGraph(generate(spec).graph)
    index = configuration_index(working)
    for _ in range(working.m):
        cfg = index.first()
        assert cfg == find_configuration(working)
        if cfg is None:
            break
        working.remove_edge(*cfg.removal_edge)
        index.refresh(*cfg.removal_edge)


def test_index_follows_restored_edges(icosahedron):
    working = PeelGraph(icosahedron.graph)
    index = configuration_index(working)
    cfg = index.first()
    working.remove_edge(*cfg.removal_edge)
    index.refresh(*cfg.removal_edge)
    working.add_edge(*cfg.removal_edge)
    index.refresh(*cfg.removal_edge)
    assert index.first() == cfg
