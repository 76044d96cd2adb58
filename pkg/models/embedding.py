"""Rotation-system plane embeddings and their faces."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import EmbeddingError
from .graph import Graph

Dart = Tuple[int, int]


@dataclass(frozen=True)
class Face:
    """A face given by its boundary walk of darts.

    A dart ``(u, v)`` is the edge ``uv`` traversed from ``u``. Vertices may
    repeat along a walk. An isolated vertex has one empty face, recorded
    through ``isolated_vertex``.
    """

    walk: Tuple[Dart, ...]
    isolated_vertex: Optional[int] = None

    @property
    def degree(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Boundary vertices in walk order, with repetitions."""
        if not self.walk and self.isolated_vertex is not None:
            return (self.isolated_vertex,)
        return tuple(d[0] for d in self.walk)

    def incidences(self, y: int) -> List[Tuple[int, int]]:
        """Neighbors ``(previous, next)`` of each occurrence of ``y`` on the walk."""
        result = []
        k = len(self.walk)
        for idx, (tail, head) in enumerate(self.walk):
            if tail == y:
                previous = self.walk[idx - 1][0] if k else tail
                result.append((previous, head))
        return result


@dataclass(frozen=True)
class PlaneEmbedding:
    """Cyclic neighbor order around every vertex.

    In ``rotation[v]`` the successor of neighbor ``a`` is the next entry
    (cyclically). Face tracing follows dart ``(u, v)`` by ``(v, w)`` where
    ``w`` is the successor of ``u`` in ``rotation[v]``.
    """

    rotation: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def successor(self, v: int, u: int) -> int:
        around = self.rotation[v]
        return around[(around.index(u) + 1) % len(around)]

    def validate(self, g: Graph) -> None:
        """Raise EmbeddingError unless every rotation is a permutation of the adjacency."""
        if self.n != g.n:
            raise EmbeddingError(f"rotation system has {self.n} vertices, graph has {g.n}")
        for v in range(g.n):
            if sorted(self.rotation[v]) != list(g.neighbors(v)):
                raise EmbeddingError(f"rotation at vertex {v} does not match its neighbors", [v])

    def restrict(self, vertices: Sequence[int]) -> "PlaneEmbedding":
        """Embedding of the induced subgraph, relabeled in ascending vertex order."""
        order = sorted(vertices)
        index = {v: i for i, v in enumerate(order)}
        return PlaneEmbedding(
            rotation=tuple(
                tuple(index[x] for x in self.rotation[v] if x in index) for v in order
            )
        )

    @classmethod
    def from_faces(cls, n: int, faces: Sequence[Sequence[int]]) -> "PlaneEmbedding":
        """Rotation system whose traced faces are the given oriented vertex cycles.

        Every edge must be traversed once in each direction across the faces
        and the faces around each vertex must form a single cycle.
        """
        successor: List[Dict[int, int]] = [dict() for _ in range(n)]
        for cycle in faces:
            k = len(cycle)
            for idx in range(k):
                a, b, c = cycle[idx - 1], cycle[idx], cycle[(idx + 1) % k]
                if a in successor[b] and successor[b][a] != c:
                    raise EmbeddingError(f"faces disagree around vertex {b}", [b])
                successor[b][a] = c

        rotation = []
        for v in range(n):
            succ = successor[v]
            if not succ:
                rotation.append(())
                continue
            start = min(succ)
            around = [start]
            nxt = succ[start]
            while nxt != start:
                if nxt not in succ or len(around) > len(succ):
                    raise EmbeddingError(f"faces around vertex {v} do not close", [v])
                around.append(nxt)
                nxt = succ[nxt]
            if len(around) != len(succ):
                raise EmbeddingError(f"faces around vertex {v} form several cycles", [v])
            rotation.append(tuple(around))
        return cls(rotation=tuple(rotation))

    def to_lines(self) -> List[str]:
        return [" ".join(str(x) for x in around) for around in self.rotation]
