"""Properness, bichromatic cycles and alternating paths."""

import logging
from collections import defaultdict
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from models.coloring import BichromaticCycle, EdgeColoring, Verdict, Violation
from models.errors import ImproperColoringError
from models.graph import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)


def is_proper(g: Graph, c: EdgeColoring) -> Optional[Violation]:
    """Return the first clash (lowest vertex, then lowest neighbors) or None.

    Only colored edges are compared; partial colorings are fine.
    """
    for x in range(g.n):
        seen: Dict[int, int] = {}
        for y in g.neighbors(x):
            color = c.color(x, y)
            if color is None:
                continue
            if color in seen:
                return Violation(
                    vertex=x,
                    first=normalize_edge(x, seen[color]),
                    second=normalize_edge(x, y),
                    color=color,
                )
            seen[color] = y
    return None


def _require_proper(g: Graph, c: EdgeColoring) -> None:
    violation = is_proper(g, c)
    if violation is not None:
        raise ImproperColoringError(violation.vertex, violation.first, violation.second, violation.color)


def find_bichromatic_cycle(g: Graph, c: EdgeColoring) -> Optional[BichromaticCycle]:
    """First bichromatic cycle by (lowest color pair, lowest vertex), or None.

    Raises:
        ImproperColoringError: ``c`` is not proper.
    """
    _require_proper(g, c)
    classes: Dict[int, List[Edge]] = defaultdict(list)
    for (u, v), color in c.items():
        if g.has_edge(u, v):
            classes[color].append((u, v))

    for i, j in combinations(sorted(classes), 2):
        adjacency: Dict[int, List[int]] = defaultdict(list)
        for u, v in classes[i] + classes[j]:
            adjacency[u].append(v)
            adjacency[v].append(u)
        seen = set()
        for start in sorted(adjacency):
            if start in seen:
                continue
            component = _component(adjacency, start)
            seen.update(component)
            if all(len(adjacency[x]) == 2 for x in component):
                return BichromaticCycle(vertices=_walk_cycle(c, start, i, j), colors=(i, j))
    return None


def _component(adjacency: Dict[int, List[int]], start: int) -> List[int]:
    stack = [start]
    found = {start}
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if y not in found:
                found.add(y)
                stack.append(y)
    return sorted(found)


def _walk_cycle(c: EdgeColoring, start: int, i: int, j: int) -> Tuple[int, ...]:
    """Vertices of the (i, j)-cycle through ``start``, leaving along the smaller neighbor."""
    a, b = c.neighbor_via(start, i), c.neighbor_via(start, j)
    first_color = i if a < b else j
    vertices = [start]
    x, color = start, first_color
    while True:
        y = c.neighbor_via(x, color)
        if y == start:
            return tuple(vertices)
        vertices.append(y)
        x = y
        color = j if color == i else i


def alternating_path(c: EdgeColoring, u: int, v: int, i: int, j: int) -> Optional[List[int]]:
    """Path from ``u`` to ``v`` alternating colors ``i`` and ``j``, or None.

    Either color may start. Assumes ``c`` is proper, so the walk is a
    single chain or cycle.
    """
    if u == v:
        return [u]
    for start in (i, j):
        path = [u]
        x, color = u, start
        while True:
            y = c.neighbor_via(x, color)
            if y is None or y == u:
                break
            path.append(y)
            if y == v:
                return path
            x = y
            color = j if color == i else i
    return None


def exists_bichromatic_path(g: Graph, c: EdgeColoring, u: int, v: int, i: int, j: int) -> bool:
    """True iff an (i, j)-alternating path joins ``u`` and ``v``.

    Raises:
        ImproperColoringError: ``c`` is not proper.
        ValueError: ``i == j``.
    """
    if i == j:
        raise ValueError("alternating paths need two distinct colors")
    _require_proper(g, c)
    return alternating_path(c, u, v, i, j) is not None


def bichromatic_path(g: Graph, c: EdgeColoring, u: int, v: int, i: int, j: int) -> Optional[List[int]]:
    """Witness form of :func:`exists_bichromatic_path`."""
    if i == j:
        raise ValueError("alternating paths need two distinct colors")
    _require_proper(g, c)
    return alternating_path(c, u, v, i, j)


def cycle_through_edge(c: EdgeColoring, a: int, b: int) -> Optional[BichromaticCycle]:
    """A bichromatic cycle using edge ``ab``, if the current coloring has one."""
    base = c.color(a, b)
    if base is None:
        return None
    for other in sorted(c.colors_at(a)):
        if other == base:
            continue
        vertices = [a]
        x, color = a, other
        while True:
            y = c.neighbor_via(x, color)
            if y is None or y == a:
                break
            vertices.append(y)
            if y == b:
                return BichromaticCycle(vertices=tuple(vertices), colors=tuple(sorted((base, other))))
            x = y
            color = base if color == other else other
    return None


def verify_local(c: EdgeColoring, edges: Iterable[Edge]) -> Optional[BichromaticCycle]:
    """First bichromatic cycle through any of ``edges``.

    On a coloring that was acyclic before ``edges`` changed, this is
    equivalent to a full cycle scan.
    """
    for u, v in edges:
        cycle = cycle_through_edge(c, u, v)
        if cycle is not None:
            return cycle
    return None


def verify_acyclic(g: Graph, c: EdgeColoring, k: int) -> Verdict:
    """Accept iff ``c`` is total, proper, within colors ``1..k`` and has no bichromatic cycle."""
    missing = c.uncolored_edges(g)
    if missing:
        u, v = missing[0]
        return Verdict(False, "incomplete", f"{len(missing)} uncolored edges, first {u}-{v}")
    violation = is_proper(g, c)
    if violation is not None:
        return Verdict(
            False,
            "improper",
            f"color {violation.color} twice at vertex {violation.vertex}",
            violation=violation,
        )
    outside = [(e, color) for e, color in c.items() if not 1 <= color <= k]
    if outside:
        (u, v), color = outside[0]
        return Verdict(False, "palette", f"edge {u}-{v} has color {color} outside 1..{k}")
    cycle = find_bichromatic_cycle(g, c)
    if cycle is not None:
        i, j = cycle.colors
        return Verdict(
            False,
            "cycle",
            f"({i},{j})-cycle through {' '.join(str(x) for x in cycle.vertices)}",
            cycle=cycle,
        )
    return Verdict(True)
