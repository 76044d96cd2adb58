"""Graph construction, face tracing, censuses, 2-vertex stripping and blocks."""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from models.embedding import Dart, Face, PlaneEmbedding
from models.errors import EmbeddingError, VertexRangeError
from models.graph import BlockTree, DegreeCensus, Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)


def build_graph(edge_list: Sequence[Sequence[int]], n: Optional[int] = None) -> Graph:
    """Build a validated simple graph.

    Args:
        edge_list: Vertex pairs.
        n: Vertex count; inferred from the largest index when omitted.

    Returns:
        Graph with sorted, dense edge ids.

    Raises:
        SelfLoopError, ParallelEdgeError, VertexRangeError.
    """
    for pair in edge_list:
        for x in pair:
            if int(x) < 0:
                raise VertexRangeError(int(x), n)
    return Graph.from_edges(edge_list, n=n)


def enumerate_faces(g: Graph, emb: PlaneEmbedding) -> List[Face]:
    """Trace all faces of a rotation system and check Euler's formula per component.

    Empty faces of isolated vertices come first, then traced faces in order
    of their smallest dart.

    Raises:
        EmbeddingError: rotation does not match ``g`` or some component has
            V - E + F != 2.
    """
    emb.validate(g)
    visited = set()
    faces: List[Face] = []
    face_of: Dict[Dart, int] = {}
    faces.extend(Face(walk=(), isolated_vertex=v) for v in range(g.n) if g.degree(v) == 0)
    darts = sorted([(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])
    for start in darts:
        if start in visited:
            continue
        walk = []
        dart = start
        while dart not in visited:
            visited.add(dart)
            walk.append(dart)
            tail, head = dart
            dart = (head, emb.successor(head, tail))
        if dart != start:
            raise EmbeddingError(f"face walk from dart {start} does not close")
        for d in walk:
            face_of[d] = len(faces)
        faces.append(Face(walk=tuple(walk)))

    for component in g.components():
        members = set(component)
        edges = sum(g.degree(v) for v in component) // 2
        if edges == 0:
            continue
        face_ids = {face_of[(u, v)] for u in component for v in g.neighbors(u)}
        if len(members) - edges + len(face_ids) != 2:
            raise EmbeddingError(
                f"Euler check failed: V={len(members)} E={edges} F={len(face_ids)}",
                component,
            )
    return faces


def degree_census(g: Graph, v: int) -> DegreeCensus:
    """Count the neighbors of ``v`` by their degree."""
    if v < 0 or v >= g.n:
        raise VertexRangeError(v, g.n)
    return DegreeCensus(vertex=v, counts=dict(Counter(g.degree(x) for x in g.neighbors(v))))


@dataclass(frozen=True)
class HComponent:
    """One connected component of H, relabeled densely.

    ``to_original[i]`` is the vertex of the input graph behind local id ``i``.
    """

    graph: Graph
    to_original: Tuple[int, ...]
    from_original: Dict[int, int] = field(compare=False)

    def original(self, local: int) -> int:
        return self.to_original[local]


@dataclass(frozen=True)
class StrippedGraph:
    """H = G minus its 2-vertices (single pass), with both degree views."""

    source: Graph
    graph: Graph
    components: Tuple[HComponent, ...]
    removed: Tuple[int, ...]

    def in_h(self, v: int) -> bool:
        return self.source.degree(v) != 2

    def degree(self, v: int) -> int:
        """d(v) in the input graph."""
        return self.source.degree(v)

    def degree_h(self, v: int) -> int:
        """d_H(v); raises KeyError for stripped vertices."""
        if not self.in_h(v):
            raise KeyError(v)
        return self.graph.degree(v)

    def census(self, v: int) -> DegreeCensus:
        """n_k(v) over the input graph."""
        return degree_census(self.source, v)

    def census_h(self, v: int) -> DegreeCensus:
        """n'_k(v): neighbors in H counted by their H-degree."""
        return DegreeCensus(
            vertex=v, counts=dict(Counter(self.graph.degree(x) for x in self.graph.neighbors(v)))
        )

    def degree_drops(self) -> List[int]:
        """H-vertices whose degree changed because neighbors were stripped."""
        return [
            v for v in range(self.source.n)
            if self.in_h(v) and self.graph.degree(v) != self.source.degree(v)
        ]

    def component_of(self, v: int) -> int:
        for index, comp in enumerate(self.components):
            if v in comp.from_original:
                return index
        raise KeyError(v)


def strip_two_vertices(g: Graph) -> StrippedGraph:
    """Remove every vertex of degree exactly 2 in ``g`` (once, not iterated).

    H keeps the vertex id space of ``g`` (stripped vertices become isolated
    there); the components are also returned relabeled with their maps.
    """
    removed = tuple(v for v in range(g.n) if g.degree(v) == 2)
    gone = set(removed)
    h = g.edge_subgraph(e for e in g.edges if e[0] not in gone and e[1] not in gone)

    components = []
    for members in h.components():
        if members[0] in gone:
            continue
        local, order = h.induced_subgraph(members)
        components.append(
            HComponent(graph=local, to_original=order, from_original={v: i for i, v in enumerate(order)})
        )
    logger.debug("stripped %d 2-vertices, %d components remain", len(removed), len(components))
    return StrippedGraph(source=g, graph=h, components=tuple(components), removed=removed)


def block_decompose(g: Graph) -> BlockTree:
    """Biconnected components, their cut vertices and a breadth-first block order."""
    nxg = g.to_networkx()
    raw = [tuple(sorted(normalize_edge(u, v) for u, v in block)) for block in nx.biconnected_component_edges(nxg)]
    blocks = tuple(sorted(raw))
    cut_vertices = frozenset(nx.articulation_points(nxg))

    vertex_blocks: Dict[int, List[int]] = {}
    for index, block in enumerate(blocks):
        for x in sorted({x for e in block for x in e}):
            vertex_blocks.setdefault(x, []).append(index)

    order: List[int] = []
    attachment: List[Optional[int]] = [None] * len(blocks)
    placed = [False] * len(blocks)
    for root in range(len(blocks)):
        if placed[root]:
            continue
        placed[root] = True
        queue = deque([root])
        while queue:
            b = queue.popleft()
            order.append(b)
            for x in sorted({x for e in blocks[b] for x in e}):
                if x not in cut_vertices:
                    continue
                for other in vertex_blocks[x]:
                    if not placed[other]:
                        placed[other] = True
                        attachment[other] = x
                        queue.append(other)
    return BlockTree(
        blocks=blocks,
        cut_vertices=cut_vertices,
        order=tuple(order),
        attachment=tuple(attachment),
    )


def is_biconnected_block(g: Graph) -> bool:
    """True when all edges of ``g`` form a single block."""
    if g.m <= 1:
        return True
    non_isolated = [v for v in range(g.n) if g.degree(v)]
    if len(non_isolated) < 3:
        return True
    sub, _ = g.induced_subgraph(non_isolated)
    return nx.is_biconnected(sub.to_networkx())


def joined_by_two_paths(g: Graph, s: int, t: int) -> bool:
    """True when ``s`` and ``t`` are joined by two internally disjoint paths.

    A 2-connected graph minus an edge ``st`` stays 2-connected exactly when
    this holds. One augmenting search on the vertex-split flow network
    after a shortest first path; both searches stop as soon as ``t`` is reached.
    """
    first = _shortest_path(g, s, t)
    if first is None:
        return False
    inner = set(first[1:-1])
    succ = dict(zip(first, first[1:]))
    pred = dict(zip(first[1:], first))

    # States are (vertex, entered); entered=True is the in-copy of the vertex.
    start = (s, False)
    seen = {start}
    queue = deque([start])
    while queue:
        x, entered = queue.popleft()
        if entered:
            if x == t:
                return True
            if x == s:
                continue
            steps = [(pred[x], False)] if x in inner else [(x, False)]
        else:
            steps = [(y, True) for y in g.neighbors(x) if succ.get(x) != y]
            if x in inner:
                steps.append((x, True))
        for state in steps:
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return False


def _shortest_path(g: Graph, s: int, t: int) -> Optional[List[int]]:
    parent: Dict[int, int] = {s: s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y in parent:
                continue
            parent[y] = x
            if y == t:
                path = [t]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None
