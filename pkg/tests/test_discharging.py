from fractions import Fraction

import pytest

from analysis.discharging import (
    DischargeRules,
    TransferContext,
    discharge,
    initial_weights,
    needs_manual_review,
    transfer_amount,
)
from analysis.structure import enumerate_faces, strip_two_vertices
from generators import CorpusSpec, generate
from models.embedding import PlaneEmbedding
from models.errors import DisconnectedGraphError
from models.graph import Graph


def ctx(y, x, z, face=3, **censuses) -> TransferContext:
    return TransferContext(deg_y=y, deg_x=x, deg_z=z, face_degree=face, **censuses)


@pytest.mark.parametrize(
    "context,rule,amount",
    [
        (ctx(4, 6, 5, n7_y=0), "R1", Fraction(1, 2)),
        (ctx(4, 9, 7, n7_y=1), "R1", Fraction(4, 5)),
        (ctx(4, 9, 8, n7_y=1), "R1", Fraction(1, 5)),
        (ctx(5, 5, 5, n4_y=1), "R2", Fraction(4, 5)),
        (ctx(5, 9, 8, face=4), "R2", Fraction(1, 2)),
        (ctx(5, 5, 5), "R2", Fraction(7, 5)),
        (ctx(5, 6, 5), "R2", Fraction(6, 5)),
        (ctx(5, 7, 5), "R2", Fraction(13, 14)),
        (ctx(5, 10, 5), "R2", Fraction(11, 12)),
        (ctx(5, 8, 6), "R2", Fraction(3, 4)),
        (ctx(5, 9, 7), "R2", Fraction(9, 14)),
        (ctx(5, 10, 9, face=5), "R2", Fraction(1, 3)),
        (ctx(6, 3, 3), "R3", Fraction(1)),
        (ctx(7, 3, 3, face=8), "R3", Fraction(8, 7)),
        (ctx(9, 5, 4), "R3", Fraction(4, 3)),
        (ctx(10, 7, 3), "R4", Fraction(3, 2)),
        (ctx(12, 6, 4, n7_z=1), "R4", Fraction(7, 5)),
        (ctx(12, 6, 4, n7_z=0), "R4", Fraction(5, 4)),
        (ctx(11, 10, 5, n4_z=1), "R4", Fraction(11, 10)),
        (ctx(11, 5, 5, n4_x=1), "R4", Fraction(7, 5)),
        (ctx(11, 7, 5), "R4", Fraction(4, 3)),
        (ctx(10, 8, 6), "R4", Fraction(1)),
        (ctx(10, 3, 3, face=4), "R4", Fraction(1)),
    ],
)
def test_rule_rows(context, rule, amount):
    found = DischargeRules.match(context)
    assert found.rule == rule
    assert found.amount == amount
    assert not found.missing


def test_no_rule_for_three_vertices():
    assert DischargeRules.match(ctx(3, 5, 5)) is None


def test_large_face_at_ten_vertex_sends_nothing():
    assert DischargeRules.match(ctx(10, 5, 5, face=6)) is None


def test_r4_two_five_vertices_take_the_first_matching_row():
    found = DischargeRules.match(ctx(10, 5, 5, n4_z=1))
    assert found.amount == Fraction(7, 5)
    assert found.label.startswith("x=z=5")
    assert found.alternatives == ()


def test_r1_without_a_matching_row_is_reported_missing():
    found = DischargeRules.match(ctx(4, 4, 4, n7_y=4))
    assert found.missing
    assert found.amount == 0


def test_icosahedron_ledger(icosahedron):
    report = discharge(icosahedron.graph, icosahedron.embedding)
    assert report.components == 1
    assert report.initial.total == Fraction(-12)
    assert report.conserved
    assert len(report.transfers) == 60
    assert {t.amount for t in report.transfers} == {Fraction(7, 5)}
    assert set(report.final.vertex_weights.values()) == {Fraction(-3)}
    assert set(report.final.face_weights.values()) == {Fraction(6, 5)}
    assert len(report.negatives) == 12


@pytest.mark.parametrize("fixture", ["cube", "tetrahedron"])
def test_cubic_graphs_move_nothing(fixture, request):
    generated = request.getfixturevalue(fixture)
    report = discharge(generated.graph, generated.embedding)
    assert report.transfers == []
    assert report.final == report.initial
    assert report.final.total == Fraction(-12)


def test_wheel_hub_sends_one_per_triangle(wheel6):
    report = discharge(wheel6.graph, wheel6.embedding)
    hub_transfers = [t for t in report.transfers if t.vertex == 0]
    assert len(hub_transfers) == 6
    assert all(t.rule == "R3" and t.amount == 1 for t in hub_transfers)
    assert report.final.vertex_weights[0] == 0
    assert report.face_counts[0] == {3: 6}


def test_transfer_amount_on_a_component(icosahedron):
    stripped = strip_two_vertices(icosahedron.graph)
    comp = stripped.components[0]
    emb = icosahedron.embedding.restrict(comp.to_original)
    face = enumerate_faces(comp.graph, emb)[0]
    y = face.vertices[0]
    assert transfer_amount(comp, icosahedron.graph, emb, y, face) == Fraction(7, 5)
    off_face = next(x for x in range(comp.graph.n) if x not in face.vertices)
    with pytest.raises(ValueError):
        transfer_amount(comp, icosahedron.graph, emb, off_face, face)


@pytest.mark.parametrize(
    "spec",
    [
        CorpusSpec("subdivided", ("icosahedron", 4), 3),
        CorpusSpec("subdivided", ("prism", 6, 2), 1),
        CorpusSpec("stacked_triangulation", (40,), 2),
        CorpusSpec("grid", (4, 5)),
        CorpusSpec("cycle", (7,)),
    ],
    ids=lambda s: s.name,
)
def test_conservation_per_component(spec):
    generated = generate(spec)
    report = discharge(generated.graph, generated.embedding)
    assert report.conserved
    assert report.final.total == Fraction(-12 * report.components)


def test_cycle_strips_to_nothing():
    generated = generate(CorpusSpec("cycle", (5,)))
    report = discharge(generated.graph, generated.embedding)
    assert report.components == 0
    assert report.transfers == []


def test_initial_weights_need_one_component():
    g = Graph.from_edges([(0, 1), (2, 3)])
    emb = PlaneEmbedding(rotation=((1,), (0,), (3,), (2,)))
    with pytest.raises(DisconnectedGraphError):
        initial_weights(g, emb)


def test_report_serializes_fractions(icosahedron):
    data = discharge(icosahedron.graph, icosahedron.embedding).to_dict()
    assert data["initial"]["total"] == "-12"
    assert data["final"]["vertices"]["0"] == "-3"
    assert data["transfers"][0]["amount"] == "7/5"


def test_manual_review_flag(icosahedron):
    report = discharge(icosahedron.graph, icosahedron.embedding)
    assert not needs_manual_review(icosahedron.graph, report)
