"""Ground truth for small graphs: exact acyclic chromatic index and brute-force acceptance."""

import logging
from itertools import combinations
from typing import Dict, Optional

import networkx as nx

from config import ORACLE_EDGE_SOFT_CAP, ORACLE_NODE_LIMIT
from models.graph import Edge, Graph, normalize_edge

from .exact import exact_color_small

logger = logging.getLogger(__name__)


def exact_acyclic_index(g: Graph, k_max: int, node_limit: int = ORACLE_NODE_LIMIT) -> Optional[int]:
    """Least k <= k_max admitting an acyclic k-coloring, or None if it exceeds ``k_max``.

    Raises:
        SearchLimitExceeded: some palette size could not be decided.
    """
    if g.m > ORACLE_EDGE_SOFT_CAP:
        logger.warning("oracle on %d edges exceeds the soft cap of %d", g.m, ORACLE_EDGE_SOFT_CAP)
    if g.m == 0:
        return 0
    for k in range(max(g.max_degree, 1), k_max + 1):
        if exact_color_small(g, k, node_limit=node_limit) is not None:
            return k
    return None


def accepts(g: Graph, colors: Dict[Edge, int], k: int) -> bool:
    """Brute-force acceptance: total, in 1..k, proper, every two-color union a forest.

    Works from the raw edge map with networkx forests so it shares no code
    with the incremental checker.
    """
    normalized = {normalize_edge(u, v): c for (u, v), c in colors.items()}
    if any(e not in normalized for e in g.edges):
        return False
    if any(not 1 <= normalized[e] <= k for e in g.edges):
        return False
    for e, f in combinations(g.edges, 2):
        if set(e) & set(f) and normalized[e] == normalized[f]:
            return False
    used = sorted({normalized[e] for e in g.edges})
    for i, j in combinations(used, 2):
        union = nx.Graph()
        union.add_edges_from(e for e in g.edges if normalized[e] in (i, j))
        if not nx.is_forest(union):
            return False
    return True
