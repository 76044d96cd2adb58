"""Text formats for graphs and colorings, JSON reports and DOT witnesses.

Graph files: ``n m`` on the first line, then ``m`` lines ``u v``. An
optional ``rotations`` line is followed by ``n`` lines, line ``i`` giving
the cyclic neighbor order of vertex ``i``. Blank lines and ``#`` comments
are ignored. Coloring files hold one ``u v c`` line per edge.
"""

import json
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from config import ROTATIONS_MARKER
from models.coloring import EdgeColoring
from models.embedding import PlaneEmbedding
from models.errors import GraphFormatError
from models.extension import ExtensionTrace
from models.graph import Edge, Graph, normalize_edge

PathLike = Union[str, Path]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _ints(line: str, number: int, path: Optional[str]) -> List[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {line!r}", number, path) from None


def parse_graph(text: str, path: Optional[str] = None) -> Tuple[Graph, Optional[PlaneEmbedding]]:
    """Parse the graph text format.

    Raises:
        GraphFormatError: malformed header or edge line, self-loop, parallel
            edge, out-of-range vertex, or a rotation block of the wrong size.
        EmbeddingError: a rotation does not list exactly the vertex's neighbors.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty graph file", None, path)
    number, header = lines[0]
    values = _ints(header, number, path)
    if len(values) != 2 or values[0] < 0 or values[1] < 0:
        raise GraphFormatError("header must be 'n m' with nonnegative integers", number, path)
    n, m = values

    edges: List[Edge] = []
    seen: Set[Edge] = set()
    body = lines[1:]
    for number, line in body[:m]:
        if line == ROTATIONS_MARKER:
            raise GraphFormatError(f"expected {m} edge lines before '{ROTATIONS_MARKER}'", number, path)
        pair = _ints(line, number, path)
        if len(pair) != 2:
            raise GraphFormatError(f"edge line needs two vertices, got {len(pair)}", number, path)
        u, v = pair
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex index {x} out of range (n={n})", number, path)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", number, path)
        edge = normalize_edge(u, v)
        if edge in seen:
            raise GraphFormatError(f"parallel edge {u}-{v}", number, path)
        seen.add(edge)
        edges.append(edge)
    if len(edges) < m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}", None, path)
    graph = Graph(n=n, edges=tuple(sorted(edges)))

    rest = body[m:]
    if not rest:
        return graph, None
    number, marker = rest[0]
    if marker != ROTATIONS_MARKER:
        raise GraphFormatError(f"expected '{ROTATIONS_MARKER}' or end of file, got {marker!r}", number, path)
    # read raw lines: isolated vertices have empty rotation lines
    rotations = _rotation_rows(text, number, n, path)
    embedding = PlaneEmbedding(rotation=tuple(rotations))
    embedding.validate(graph)
    return graph, embedding


def _rotation_rows(text: str, marker_line: int, n: int, path: Optional[str]) -> List[Tuple[int, ...]]:
    raw_lines = text.splitlines()[marker_line:]
    rows: List[Tuple[int, ...]] = []
    for offset, raw in enumerate(raw_lines[:n]):
        rows.append(tuple(_ints(raw.split("#", 1)[0], marker_line + offset + 1, path)))
    # trailing isolated vertices may omit their empty lines
    rows += [()] * (n - len(rows))
    for offset, raw in enumerate(raw_lines[n:]):
        if raw.split("#", 1)[0].strip():
            raise GraphFormatError("unexpected content after the rotation block", marker_line + n + offset + 1, path)
    return rows


def read_graph(path: PathLike) -> Tuple[Graph, Optional[PlaneEmbedding]]:
    """Read a graph file; see :func:`parse_graph`."""
    file_path = Path(path)
    try:
        text = file_path.read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph file: {exc.strerror}", None, str(path)) from exc
    return parse_graph(text, str(path))


def format_graph(graph: Graph, embedding: Optional[PlaneEmbedding] = None) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines += [f"{u} {v}" for u, v in graph.edges]
    if embedding is not None:
        lines.append(ROTATIONS_MARKER)
        lines += embedding.to_lines()
    return "\n".join(lines) + "\n"


def write_graph(path: PathLike, graph: Graph, embedding: Optional[PlaneEmbedding] = None) -> None:
    Path(path).write_text(format_graph(graph, embedding))


def parse_coloring(text: str, graph: Graph, palette_size: Optional[int] = None, path: Optional[str] = None) -> EdgeColoring:
    """Parse ``u v c`` lines into a non-strict coloring of ``graph``.

    Clashing colors are kept so verification can report them. The palette
    defaults to the largest color present.

    Raises:
        GraphFormatError: malformed line, unknown edge, repeated edge or color below 1.
    """
    entries: Dict[Edge, int] = {}
    for number, line in _content_lines(text):
        values = _ints(line, number, path)
        if len(values) != 3:
            raise GraphFormatError("coloring line must be 'u v c'", number, path)
        u, v, color = values
        if not (0 <= u < graph.n and 0 <= v < graph.n) or u == v or not graph.has_edge(u, v):
            raise GraphFormatError(f"{u}-{v} is not an edge of the graph", number, path)
        if color < 1:
            raise GraphFormatError(f"colors are positive integers, got {color}", number, path)
        edge = normalize_edge(u, v)
        if edge in entries:
            raise GraphFormatError(f"edge {u}-{v} colored twice", number, path)
        entries[edge] = color
    size = palette_size if palette_size is not None else max(entries.values(), default=0)
    coloring = EdgeColoring(graph.n, size, strict=False)
    for (u, v), color in sorted(entries.items()):
        coloring.assign(u, v, color)
    return coloring


def read_coloring(path: PathLike, graph: Graph, palette_size: Optional[int] = None) -> EdgeColoring:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read coloring file: {exc.strerror}", None, str(path)) from exc
    return parse_coloring(text, graph, palette_size, str(path))


def format_coloring(coloring: EdgeColoring) -> str:
    return "".join(f"{u} {v} {c}\n" for (u, v), c in coloring.items())


def write_coloring(path: PathLike, coloring: EdgeColoring) -> None:
    Path(path).write_text(format_coloring(coloring))


def write_json(path: PathLike, data) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def write_jsonl(path: PathLike, rows: Iterable[dict]) -> None:
    with open(path, "w") as f:
        for row in rows:
            f.write(json.dumps(row, sort_keys=True) + "\n")


def write_trace(path: PathLike, trace: ExtensionTrace) -> None:
    """One JSON object per extension step."""
    write_jsonl(path, trace.to_lines())


def read_trace(path: PathLike) -> ExtensionTrace:
    from models.extension import TraceStep

    trace = ExtensionTrace()
    for number, line in _content_lines(Path(path).read_text()):
        try:
            trace.record(TraceStep.from_dict(json.loads(line)))
        except (ValueError, KeyError) as exc:
            raise GraphFormatError(f"bad trace record: {exc}", number, str(path)) from exc
    return trace


def witness_dot(
    graph: Graph,
    vertices: Sequence[int] = (),
    edges: Sequence[Edge] = (),
    coloring: Optional[EdgeColoring] = None,
    title: str = "witness",
) -> str:
    """DOT text for ``graph`` with witness vertices and edges highlighted."""
    marked_vertices = set(vertices)
    marked_edges = {normalize_edge(u, v) for u, v in edges}
    lines = [f'graph "{title}" {{', "  node [shape=circle];"]
    for x in range(graph.n):
        style = ' [style=filled, fillcolor="#f4b942"]' if x in marked_vertices else ""
        lines.append(f"  {x}{style};")
    for u, v in graph.edges:
        attrs = []
        if coloring is not None and coloring.color(u, v) is not None:
            attrs.append(f'label="{coloring.color(u, v)}"')
        if (u, v) in marked_edges:
            attrs.append('color="#d62728", penwidth=3')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(path: PathLike, text: str) -> None:
    Path(path).write_text(text)


__all__ = [
    "format_coloring",
    "format_graph",
    "parse_coloring",
    "parse_graph",
    "read_coloring",
    "read_graph",
    "read_trace",
    "witness_dot",
    "write_coloring",
    "write_dot",
    "write_graph",
    "write_json",
    "write_jsonl",
    "write_trace",
]
