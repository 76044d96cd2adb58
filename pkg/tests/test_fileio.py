import json

import pytest

from analysis.acyclic import is_proper
from generators import CorpusSpec, generate
from models.errors import EmbeddingError, GraphFormatError
from models.extension import ExtensionTrace, Recolor, TraceStep
from models.graph import Graph
from utils.fileio import (
    format_coloring,
    format_graph,
    parse_coloring,
    parse_graph,
    read_graph,
    read_trace,
    witness_dot,
    write_graph,
    write_trace,
)

SQUARE = """\
# a 4-cycle
4 4
0 1
1 2
2 3
3 0   # closing edge
"""


def test_parse_normalizes_and_skips_comments():
    graph, embedding = parse_graph(SQUARE)
    assert graph.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert embedding is None


def test_graph_file_keeps_rotations(tmp_path):
    generated = generate(CorpusSpec("wheel", (5,)))
    path = tmp_path / "wheel.txt"
    write_graph(path, generated.graph, generated.embedding)
    graph, embedding = read_graph(path)
    assert graph == generated.graph
    assert embedding.rotation == generated.embedding.rotation
    assert "rotations" in path.read_text()


def test_isolated_trailing_vertices_may_omit_rotation_lines():
    graph, embedding = parse_graph("4 1\n0 1\nrotations\n1\n0\n")
    assert embedding.rotation == ((1,), (0,), (), ())


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("4\n", 1, "header"),
        ("3 1\n0 5\n", 2, "out of range"),
        ("3 1\n1 1\n", 2, "self-loop"),
        ("3 2\n0 1\n1 0\n", 3, "parallel"),
        ("3 2\n0 1\n", None, "announces 2 edges"),
        ("3 1\n0 x\n", 2, "integers"),
        ("3 1\n0 1\nspin\n", 3, "rotations"),
        ("3 2\n0 1\nrotations\n", 3, "edge lines"),
    ],
)
def test_graph_format_errors(text, line, fragment):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph(text, path="g.txt")
    assert excinfo.value.line == line
    assert fragment in str(excinfo.value)
    assert str(excinfo.value).startswith("g.txt:")


def test_empty_file_is_rejected():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing here\n\n")


def test_rotation_must_list_the_neighbors():
    with pytest.raises(EmbeddingError):
        parse_graph("3 2\n0 1\n1 2\nrotations\n1\n0 2\n0\n")


def test_missing_graph_file(tmp_path):
    with pytest.raises(GraphFormatError) as excinfo:
        read_graph(tmp_path / "absent.txt")
    assert "cannot read" in str(excinfo.value)


def test_format_graph_without_rotations():
    graph = Graph.from_edges([(0, 1), (1, 2)])
    assert format_graph(graph) == "3 2\n0 1\n1 2\n"


def test_coloring_text_round_trip():
    graph, _ = parse_graph(SQUARE)
    coloring = parse_coloring("0 1 1\n2 1 2\n2 3 1\n3 0 2\n", graph)
    assert coloring.palette_size == 2
    assert format_coloring(coloring) == "0 1 1\n0 3 2\n1 2 2\n2 3 1\n"


def test_clashing_coloring_is_kept_for_verification():
    graph, _ = parse_graph(SQUARE)
    coloring = parse_coloring("0 1 1\n1 2 1\n", graph, palette_size=3)
    assert coloring.color(0, 1) == 1 and coloring.color(1, 2) == 1
    assert is_proper(graph, coloring) is not None


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("0 2 1\n", "not an edge"),
        ("0 1\n", "u v c"),
        ("0 1 0\n", "positive"),
        ("0 1 1\n1 0 2\n", "colored twice"),
    ],
)
def test_coloring_format_errors(text, fragment):
    graph, _ = parse_graph(SQUARE)
    with pytest.raises(GraphFormatError) as excinfo:
        parse_coloring(text, graph)
    assert fragment in str(excinfo.value)


def test_trace_file(tmp_path):
    trace = ExtensionTrace()
    trace.record(TraceStep("A1", "free color", (0, 1), [Recolor(0, 1, None, 3)]))
    trace.record(TraceStep("A2_1", "fallback recolored 1 edges", (2, 5), [Recolor(2, 5, None, 1), Recolor(2, 3, 1, 4)], fallback=True))
    path = tmp_path / "trace.jsonl"
    write_trace(path, trace)
    rows = [json.loads(line) for line in path.read_text().splitlines()]
    assert [row["kind"] for row in rows] == ["A1", "A2_1"]
    loaded = read_trace(path)
    assert loaded.steps == trace.steps
    assert loaded.fallback_steps == [1]


def test_bad_trace_record(tmp_path):
    path = tmp_path / "trace.jsonl"
    path.write_text("{\"kind\": \"A1\"}\n")
    with pytest.raises(GraphFormatError) as excinfo:
        read_trace(path)
    assert excinfo.value.line == 1


def test_witness_dot_highlights():
    graph, _ = parse_graph(SQUARE)
    coloring = parse_coloring("0 1 1\n1 2 2\n", graph)
    text = witness_dot(graph, vertices=[1], edges=[(1, 0)], coloring=coloring, title="cycle")
    assert text.startswith('graph "cycle" {')
    assert '  1 [style=filled, fillcolor="#f4b942"];' in text
    assert '  0 -- 1 [label="1", color="#d62728", penwidth=3];' in text
    assert "  2 -- 3;" in text
