"""Data models for simple undirected graphs."""

from bisect import bisect_left, insort
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import ParallelEdgeError, SelfLoopError, VertexRangeError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge with its smaller endpoint first."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Edges are stored normalized and sorted, so edge ids are dense and
    deterministic. Adjacency lists are sorted ascending.
    """

    n: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_ids: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise VertexRangeError(self.n)
        normalized = []
        seen = set()
        for u, v in self.edges:
            for x in (u, v):
                if x < 0 or x >= self.n:
                    raise VertexRangeError(x, self.n)
            if u == v:
                raise SelfLoopError(u)
            e = normalize_edge(u, v)
            if e in seen:
                raise ParallelEdgeError(*e)
            seen.add(e)
            normalized.append(e)
        normalized.sort()

        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)

        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in neighbors))
        object.__setattr__(self, "_edge_ids", {e: i for i, e in enumerate(normalized)})

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: Optional[int] = None) -> "Graph":
        """Build a graph, inferring ``n`` from the largest index when omitted."""
        pairs = [(int(e[0]), int(e[1])) for e in edges]
        if n is None:
            n = max((max(u, v) for u, v in pairs), default=-1) + 1
        return cls(n=n, edges=tuple(pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        """Maximum degree (0 for the edgeless graph)."""
        return max((len(a) for a in self.adjacency), default=0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self._edge_ids

    def edge_id(self, u: int, v: int) -> int:
        """Dense id of edge ``uv``; raises KeyError if absent."""
        return self._edge_ids[normalize_edge(u, v)]

    def without_edge(self, u: int, v: int) -> "Graph":
        """Return a copy with edge ``uv`` deleted; vertex ids are unchanged."""
        target = normalize_edge(u, v)
        if target not in self._edge_ids:
            raise KeyError(target)
        return Graph(n=self.n, edges=tuple(e for e in self.edges if e != target))

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Subgraph on the given edges, keeping the full vertex id space."""
        return Graph(n=self.n, edges=tuple(normalize_edge(u, v) for u, v in edges))

    def induced_subgraph(self, vertices: Sequence[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """Induced subgraph relabeled densely in ascending vertex order.

        Returns:
            The relabeled graph and the tuple mapping new ids to old ids.
        """
        order = tuple(sorted(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(n=len(order), edges=tuple(edges)), order

    def components(self) -> List[Tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by smallest vertex.

        Isolated vertices form their own components.
        """
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack = [start]
            members = []
            while stack:
                x = stack.pop()
                members.append(x)
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            result.append(tuple(sorted(members)))
        return result

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph with the same vertex ids."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return cls.from_edges(data["edges"], n=data["n"])


class PeelGraph:
    """Mutable working copy of a Graph for deleting and restoring edges one at a time.

    Reads like a Graph (``n``, ``m``, ``edges``, ``degree``, ``neighbors``,
    ``has_edge``, ``max_degree``); adjacency lists stay sorted.
    """

    def __init__(self, graph: Graph):
        self.n = graph.n
        self.m = graph.m
        self._adjacency: List[List[int]] = [list(a) for a in graph.adjacency]
        self._degree_counts: Counter = Counter(len(a) for a in self._adjacency)

    @property
    def max_degree(self) -> int:
        return max(self._degree_counts, default=0)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple((u, v) for u, a in enumerate(self._adjacency) for v in a if u < v)

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self._adjacency[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def remove_edge(self, u: int, v: int) -> None:
        """Delete ``uv``; raises KeyError if absent."""
        if not self.has_edge(u, v):
            raise KeyError(normalize_edge(u, v))
        for x, y in ((u, v), (v, u)):
            self._shift(x, -1)
            self._adjacency[x].remove(y)
        self.m -= 1

    def add_edge(self, u: int, v: int) -> None:
        """Restore ``uv``; raises KeyError if present."""
        if u == v or self.has_edge(u, v):
            raise KeyError(normalize_edge(u, v))
        for x, y in ((u, v), (v, u)):
            self._shift(x, 1)
            insort(self._adjacency[x], y)
        self.m += 1

    def _shift(self, x: int, delta: int) -> None:
        d = len(self._adjacency[x])
        self._degree_counts[d] -= 1
        if not self._degree_counts[d]:
            del self._degree_counts[d]
        self._degree_counts[d + delta] += 1

    def freeze(self) -> Graph:
        return Graph(n=self.n, edges=self.edges)


@dataclass(frozen=True)
class DegreeCensus:
    """Neighbor degree counts of one vertex: ``counts[k]`` is n_k(v)."""

    vertex: int
    counts: Dict[int, int]

    def n(self, k: int) -> int:
        return self.counts.get(k, 0)

    def n_plus(self, k: int) -> int:
        """Number of neighbors with degree at least ``k``."""
        return sum(c for d, c in self.counts.items() if d >= k)

    def n_minus(self, k: int) -> int:
        """Number of neighbors with degree at most ``k``."""
        return sum(c for d, c in self.counts.items() if d <= k)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class BlockTree:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.

    ``order`` lists block indices breadth-first from the block holding the
    smallest edge; ``attachment[b]`` is the cut vertex through which block
    ``b`` hangs off an earlier block (None for each root).
    """

    blocks: Tuple[Tuple[Edge, ...], ...]
    cut_vertices: FrozenSet[int]
    order: Tuple[int, ...]
    attachment: Tuple[Optional[int], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_vertices(self, index: int) -> FrozenSet[int]:
        return frozenset(x for e in self.blocks[index] for x in e)

    def blocks_at(self, vertex: int) -> List[int]:
        return [i for i in range(len(self.blocks)) if vertex in self.block_vertices(i)]
