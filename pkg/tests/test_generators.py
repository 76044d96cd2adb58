import pytest

from analysis.structure import enumerate_faces
from generators import (
    GENERATORS,
    CorpusSpec,
    default_corpus,
    generate,
    get_generator,
    normalize_family,
)
from models.errors import GeneratorParameterError


def test_wheel_shape():
    g = generate(CorpusSpec("wheel", (6,))).graph
    assert (g.n, g.m) == (7, 12)
    assert g.degree(0) == 6
    assert all(g.degree(v) == 3 for v in range(1, 7))


def test_grid_ids_are_row_major():
    g = generate(CorpusSpec("grid", (3, 4))).graph
    assert (g.n, g.m) == (12, 17)
    assert g.has_edge(0, 1) and g.has_edge(0, 4)
    assert not g.has_edge(3, 4)


def test_icosahedron_is_five_regular():
    generated = generate(CorpusSpec("icosahedron"))
    g = generated.graph
    assert (g.n, g.m) == (12, 30)
    assert {g.degree(v) for v in range(g.n)} == {5}
    assert len(enumerate_faces(g, generated.embedding)) == 20


def test_stacked_triangulation_is_maximal_planar():
    generated = generate(CorpusSpec("stacked_triangulation", (20,), 1))
    g = generated.graph
    assert g.m == 3 * 20 - 6
    faces = enumerate_faces(g, generated.embedding)
    assert len(faces) == 2 * 20 - 4
    assert {f.degree for f in faces} == {3}


def test_generation_is_deterministic_per_seed():
    first = generate(CorpusSpec("stacked_triangulation", (40,), 3)).graph
    again = generate(CorpusSpec("stacked_triangulation", (40,), 3)).graph
    other = generate(CorpusSpec("stacked_triangulation", (40,), 4)).graph
    assert first == again
    assert first != other


def test_subdivision_adds_degree_two_vertices():
    base_generated = generate(CorpusSpec("prism", (6,)))
    base = base_generated.graph
    generated = generate(CorpusSpec("subdivided", ("prism", 6, 4), 2))
    g = generated.graph
    assert g.n == base.n + 4
    assert g.m == base.m + 4
    assert all(g.degree(v) == 2 for v in range(base.n, g.n))
    # the new vertices lie on exactly the faces of their edges
    assert len(enumerate_faces(g, generated.embedding)) == len(enumerate_faces(base, base_generated.embedding))


@pytest.mark.parametrize("n,m", [(1, 0), (2, 1), (3, 3), (4, 6)])
def test_small_complete_graphs(n, m):
    g = generate(CorpusSpec("complete", (n,))).graph
    assert (g.n, g.m) == (n, m)


@pytest.mark.parametrize(
    "spec",
    [
        CorpusSpec("complete", (5,)),
        CorpusSpec("wheel", (2,)),
        CorpusSpec("grid", (1, 4)),
        CorpusSpec("wheel", ()),
        CorpusSpec("wheel", ("six",)),
        CorpusSpec("subdivided", ("cycle", 4, 9)),
        CorpusSpec("subdivided", ("cycle",)),
        CorpusSpec("moebius", (3,)),
    ],
    ids=lambda s: s.name,
)
def test_bad_parameters(spec):
    with pytest.raises(GeneratorParameterError):
        generate(spec)


def test_aliases_resolve():
    assert normalize_family("Stacked") == "stacked_triangulation"
    assert normalize_family("ico") == "icosahedron"
    assert normalize_family("stacked-triangulation") == "stacked_triangulation"
    assert normalize_family("torus") is None
    assert get_generator("k").family == "complete"


def test_every_family_is_registered():
    assert set(GENERATORS) == {
        "wheel",
        "grid",
        "cycle",
        "complete",
        "prism",
        "icosahedron",
        "stacked_triangulation",
        "subdivided",
    }


def test_default_corpus():
    specs = default_corpus()
    assert len(specs) >= 1000
    assert len({s.name for s in specs}) == len(specs)
    assert specs[0].name == "wheel(3)#0"
    assert {s.family for s in specs} == set(GENERATORS)


def test_corpus_spec_round_trip():
    spec = CorpusSpec("subdivided", ("wheel", 15, 4), 2)
    assert CorpusSpec.from_dict(spec.to_dict()) == spec
