"""Bounded local recoloring search used when no configuration move applies."""

import logging
from typing import List, Optional, Set, Tuple

from analysis.acyclic import verify_local
from config import FALLBACK_NODE_LIMIT, FALLBACK_RADIUS
from models.coloring import EdgeColoring
from models.errors import ExtensionFailedError
from models.extension import Recolor, TraceStep
from models.graph import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)


class _NodeLimit(Exception):
    pass


class FallbackSearch:
    """Conflict-directed search recoloring at most ``radius`` edges near ``uv``.

    Only edges with an endpoint in N[u] ∪ N[v] may change. A color for
    ``uv`` blocked by an edge at u or v recolors the blocker first; a color
    that closes a bichromatic cycle recolors one edge of that cycle.
    """

    def __init__(
        self,
        graph: Graph,
        uv: Edge,
        coloring: EdgeColoring,
        palette_size: int,
        radius: int = FALLBACK_RADIUS,
        node_limit: int = FALLBACK_NODE_LIMIT,
    ):
        self.graph = graph
        self.u, self.v = normalize_edge(*uv)
        self.coloring = coloring.copy()
        self.before = coloring
        self.palette = range(1, palette_size + 1)
        self.radius = radius
        self.node_limit = node_limit
        self.nodes = 0
        self.changed: Set[Edge] = set()
        around = {self.u, self.v} | set(graph.neighbors(self.u)) | set(graph.neighbors(self.v))
        self.region: Set[Edge] = {e for e in graph.edges if (e[0] in around or e[1] in around) and e != (self.u, self.v)}

    def run(self) -> Optional[EdgeColoring]:
        """The extended coloring, or None if the search space is exhausted."""
        try:
            found = self._search(self.radius)
        except _NodeLimit:
            logger.debug("fallback at %d-%d hit the node limit of %d", self.u, self.v, self.node_limit)
            return None
        return self.coloring if found else None

    def operations(self) -> List[Recolor]:
        ops = [Recolor(self.u, self.v, None, self.coloring.color(self.u, self.v))]
        for a, b in sorted(self.changed):
            ops.append(Recolor(a, b, self.before.color(a, b), self.coloring.color(a, b)))
        return ops

    def _search(self, budget: int) -> bool:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _NodeLimit()
        u, v = self.u, self.v
        for a in self.palette:
            blockers = [normalize_edge(x, y) for x, y in ((u, self.coloring.neighbor_via(u, a)), (v, self.coloring.neighbor_via(v, a))) if y is not None]
            if not blockers:
                self.coloring.assign(u, v, a)
                cycle = verify_local(self.coloring, [(u, v)] + sorted(self.changed))
                if cycle is None:
                    return True
                self.coloring.clear(u, v)
                candidates = [e for e in cycle.edges if e in self.region and e not in self.changed]
            else:
                if any(e not in self.region or e in self.changed for e in blockers):
                    continue
                candidates = blockers[:1]
            if budget == 0:
                continue
            for edge in candidates:
                if self._recolor_and_search(edge, budget):
                    return True
        return False

    def _recolor_and_search(self, edge: Edge, budget: int) -> bool:
        old = self.coloring.color(*edge)
        for b in self.palette:
            if b == old or not self.coloring.can_take(edge[0], edge[1], b):
                continue
            self.coloring.clear(*edge)
            self.coloring.assign(edge[0], edge[1], b)
            self.changed.add(edge)
            if self._search(budget - 1):
                return True
            self.changed.discard(edge)
            self.coloring.clear(*edge)
            if old is not None:
                self.coloring.assign(edge[0], edge[1], old)
        return False


def fallback_extend(
    graph: Graph,
    uv: Edge,
    coloring: EdgeColoring,
    palette_size: int,
    radius: int = FALLBACK_RADIUS,
    kind: str = "fallback",
    node_limit: int = FALLBACK_NODE_LIMIT,
) -> Tuple[EdgeColoring, TraceStep]:
    """Extend ``coloring`` of G - uv to ``uv`` by bounded recoloring.

    Raises:
        ExtensionFailedError: no extension within ``radius`` recolored edges.
    """
    search = FallbackSearch(graph, uv, coloring, palette_size, radius=radius, node_limit=node_limit)
    result = search.run()
    if result is None:
        raise ExtensionFailedError(
            f"could not extend to edge {search.u}-{search.v} recoloring at most {radius} edges "
            f"({search.nodes} nodes searched)"
        )
    step = TraceStep(
        kind=kind,
        branch=f"fallback recolored {len(search.changed)} edges",
        removal_edge=(search.u, search.v),
        operations=search.operations(),
        fallback=True,
    )
    return result, step
