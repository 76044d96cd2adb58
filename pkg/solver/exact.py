"""Exhaustive backtracking for acyclic edge colorings of small graphs."""

import logging
from typing import Dict, List, Optional

from analysis.acyclic import cycle_through_edge
from config import EXACT_NODE_LIMIT
from models.coloring import EdgeColoring
from models.errors import SearchLimitExceeded
from models.graph import Edge, Graph

logger = logging.getLogger(__name__)


def degeneracy_order(g: Graph) -> List[int]:
    """Vertices in smallest-last order, reversed so dense cores come first."""
    degree: Dict[int, int] = {v: g.degree(v) for v in range(g.n)}
    removed = [False] * g.n
    order = []
    for _ in range(g.n):
        v = min((x for x in range(g.n) if not removed[x]), key=lambda x: (degree[x], x))
        removed[v] = True
        order.append(v)
        for y in g.neighbors(v):
            if not removed[y]:
                degree[y] -= 1
    order.reverse()
    return order


def edge_order(g: Graph) -> List[Edge]:
    """Edges sorted by the later of their endpoints in degeneracy order."""
    rank = {v: i for i, v in enumerate(degeneracy_order(g))}
    return sorted(g.edges, key=lambda e: (max(rank[e[0]], rank[e[1]]), min(rank[e[0]], rank[e[1]]), e))


def exact_color_small(g: Graph, k: int, node_limit: int = EXACT_NODE_LIMIT) -> Optional[EdgeColoring]:
    """First acyclic coloring of ``g`` with colors ``1..k`` found by backtracking.

    The first edge is fixed to color 1. Each assignment is pruned by
    properness and by a walk for a bichromatic cycle through the new edge.

    Returns:
        A total acyclic coloring, or None if none exists.

    Raises:
        SearchLimitExceeded: more than ``node_limit`` color trials.
    """
    coloring = EdgeColoring(g.n, k)
    order = edge_order(g)
    if not order:
        return coloring
    if k < 1:
        return None

    tried = [0] * len(order)
    nodes = 0
    position = 0
    while 0 <= position < len(order):
        a, b = order[position]
        if tried[position]:
            coloring.clear(a, b)
        top = 1 if position == 0 else k
        chosen = 0
        for color in range(tried[position] + 1, top + 1):
            nodes += 1
            if nodes > node_limit:
                raise SearchLimitExceeded(node_limit)
            if not coloring.can_take(a, b, color):
                continue
            coloring.assign(a, b, color)
            if cycle_through_edge(coloring, a, b) is None:
                chosen = color
                break
            coloring.clear(a, b)
        if chosen:
            tried[position] = chosen
            position += 1
        else:
            tried[position] = 0
            position -= 1

    if position < 0:
        logger.debug("no acyclic %d-coloring of a graph with %d edges (%d nodes)", k, g.m, nodes)
        return None
    return coloring
