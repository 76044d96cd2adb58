"""Acyclic edge coloring of planar graphs with max degree + 7 colors.

The driver peels one edge per step: a reducible configuration is located,
its removal edge deleted, and the smaller graph colored first. The
colorings are then extended back edge by edge, newest deletion last.
Blocks are colored separately and merged at cut vertices.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from analysis.acyclic import verify_acyclic
from analysis.structure import block_decompose, is_biconnected_block, joined_by_two_paths
from config import (
    EXACT_NODE_LIMIT,
    FALLBACK_RADIUS,
    PALETTE_SLACK,
    SMALL_DEGREE_BOUND,
    SMALL_DEGREE_COLORS,
)
from detectors import configuration_index
from extenders import extend_coloring as run_extender
from extenders import fallback_extend as run_fallback
from models.coloring import EdgeColoring
from models.configuration import Configuration
from models.errors import (
    BranchMismatchError,
    ExtensionFailedError,
    NoConfigurationError,
    PaletteTooSmallError,
    SearchLimitExceeded,
)
from models.extension import ColorizerState
from models.graph import BlockTree, Edge, Graph, PeelGraph

from .exact import exact_color_small

logger = logging.getLogger(__name__)


def palette_for(g: Graph) -> int:
    """K = max degree + 7."""
    return g.max_degree + PALETTE_SLACK


def rainbow(g: Graph, palette_size: int) -> EdgeColoring:
    """Distinct colors 1..m in edge order."""
    if g.m > palette_size:
        raise PaletteTooSmallError(f"{g.m} edges cannot be rainbow-colored with {palette_size} colors")
    coloring = EdgeColoring(g.n, palette_size)
    for color, (u, v) in enumerate(g.edges, start=1):
        coloring.assign(u, v, color)
    return coloring


def merge_blocks(block_colorings: Sequence[EdgeColoring], tree: BlockTree, palette_size: int) -> EdgeColoring:
    """Combine per-block colorings into one, permuting colors block by block.

    Blocks are taken in tree order. A block hanging off an earlier one at a
    cut vertex has its colors permuted so the colors it brings to that
    vertex avoid the ones already there; everything else keeps its color
    where possible.

    Raises:
        PaletteTooSmallError: the palette cannot separate the colors at a cut vertex.
    """
    n = block_colorings[0].n if block_colorings else 0
    merged = EdgeColoring(n, palette_size)
    for index in tree.order:
        block = tree.blocks[index]
        source = block_colorings[index]
        cut = tree.attachment[index]
        mapping = _block_permutation(source, block, merged.colors_at(cut) if cut is not None else frozenset(), cut, palette_size)
        for u, v in block:
            merged.assign(u, v, mapping[source.color(u, v)])
    return merged


def _block_permutation(
    source: EdgeColoring,
    block: Sequence[Edge],
    forbidden,
    cut: Optional[int],
    palette_size: int,
) -> Dict[int, int]:
    used = sorted({source.color(u, v) for u, v in block})
    at_cut = sorted({source.color(u, v) for u, v in block if cut in (u, v)}) if cut is not None else []
    mapping: Dict[int, int] = {}
    targets = set()
    for color in at_cut:
        choice = next((t for t in range(1, palette_size + 1) if t not in forbidden and t not in targets), None)
        if choice is None:
            raise PaletteTooSmallError(
                f"cut vertex {cut} needs {len(at_cut) + len(forbidden)} colors, palette has {palette_size}"
            )
        mapping[color] = choice
        targets.add(choice)
    for color in used:
        if color in mapping:
            continue
        choice = color if color not in targets else next(
            (t for t in range(1, palette_size + 1) if t not in targets), None
        )
        if choice is None:
            raise PaletteTooSmallError(f"block uses more than {palette_size} colors")
        mapping[color] = choice
        targets.add(choice)
    return mapping


def attach_pendant(coloring: EdgeColoring, leaf: int, anchor: int) -> None:
    """Color the bridge from a degree-1 vertex with the smallest color missing at ``anchor``.

    Raises:
        PaletteTooSmallError: every color is already used at ``anchor``.
    """
    taken = coloring.colors_at(anchor) | coloring.colors_at(leaf)
    color = next((c for c in range(1, coloring.palette_size + 1) if c not in taken), None)
    if color is None:
        raise PaletteTooSmallError(f"no color left for the bridge {leaf}-{anchor}")
    coloring.assign(leaf, anchor, color)


def extend_coloring(
    state: ColorizerState,
    cfg: Configuration,
    c_h: EdgeColoring,
    graph: Optional[Union[Graph, PeelGraph]] = None,
) -> EdgeColoring:
    """Extend a coloring of ``graph`` minus the removal edge to ``graph`` (default: state.graph).

    Tries the configuration's own moves first; on a branch mismatch the
    bounded fallback search runs and the incident is counted.

    Raises:
        ExtensionFailedError: the fallback search found nothing either.
    """
    graph = graph if graph is not None else state.graph
    try:
        coloring, step = run_extender(graph, cfg, c_h, state.palette_size, strict=state.strict)
    except BranchMismatchError as exc:
        logger.warning(
            "fallback incident: %s at trace position %d (last branch %r)",
            cfg.summary,
            len(state.trace),
            exc.label,
        )
        state.fallback_incidents += 1
        coloring, step = fallback_extend(state, cfg.removal_edge, c_h, graph=graph, kind=cfg.kind.value)
    if state.strict:
        verdict = verify_acyclic(graph, coloring, state.palette_size)
        if not verdict.accepted:
            raise ExtensionFailedError(f"{cfg.summary}: {verdict.detail}", trace=state.trace)
    state.trace.record(step)
    return coloring


def fallback_extend(
    state: ColorizerState,
    uv: Edge,
    c_h: EdgeColoring,
    graph: Optional[Union[Graph, PeelGraph]] = None,
    kind: str = "fallback",
):
    """Bounded recoloring search around ``uv``; returns the coloring and its trace step.

    Raises:
        ExtensionFailedError: nothing found within the state's fallback radius.
    """
    graph = graph if graph is not None else state.graph
    try:
        return run_fallback(graph, uv, c_h, state.palette_size, radius=state.fallback_radius, kind=kind)
    except ExtensionFailedError as exc:
        raise ExtensionFailedError(str(exc), trace=state.trace) from exc


class Colorizer:
    """Colors one graph; the palette is fixed from the input's max degree."""

    def __init__(self, graph: Graph, fallback_radius: int = FALLBACK_RADIUS, strict: bool = False):
        self.state = ColorizerState(
            graph=graph,
            palette_size=palette_for(graph),
            fallback_radius=fallback_radius,
            strict=strict,
        )

    @property
    def palette_size(self) -> int:
        return self.state.palette_size

    def run(self) -> EdgeColoring:
        """Color the input and verify the result.

        Raises:
            NoConfigurationError: a 2-connected piece with max degree >= 5 has no configuration.
            ExtensionFailedError: an extension step could not be completed.
        """
        g = self.state.graph
        coloring = self._color(g)
        verdict = verify_acyclic(g, coloring, self.palette_size)
        if not verdict.accepted:
            raise ExtensionFailedError(f"final verification rejected: {verdict.detail}", trace=self.state.trace)
        self.state.coloring = coloring
        logger.info(
            "colored %d edges with %d of %d colors, %d extension steps, %d fallback incidents",
            g.m,
            len(coloring.colors_used()),
            self.palette_size,
            len(self.state.trace),
            self.state.fallback_incidents,
        )
        return coloring

    def _color(self, g: Graph) -> EdgeColoring:
        # Frames unwind newest first; each restores what its step deleted or split off.
        frames: List[Tuple[str, object, object]] = []
        current = g
        allow_exact = True
        while True:
            if current.m <= self.palette_size:
                coloring = rainbow(current, self.palette_size)
                break
            if allow_exact and current.max_degree <= SMALL_DEGREE_BOUND:
                coloring = self._small_degree(current)
                if coloring is not None:
                    break
                allow_exact = False
            if not is_biconnected_block(current):
                tree = block_decompose(current)
                main = max(range(len(tree)), key=lambda b: (len(tree.blocks[b]), -b))
                colorings: List[Optional[EdgeColoring]] = [
                    None if b == main else self._color(current.edge_subgraph(block))
                    for b, block in enumerate(tree.blocks)
                ]
                frames.append(("merge", tree, (main, colorings)))
                current = current.edge_subgraph(tree.blocks[main])
                continue
            current = self._peel(current, frames, allow_exact)

        for action, first, second in reversed(frames):
            if action == "extend":
                first.add_edge(*second.removal_edge)
                coloring = extend_coloring(self.state, second, coloring, graph=first)
            elif action == "bridge":
                first.add_edge(*second)
                attach_pendant(coloring, *second)
            else:
                main, colorings = second
                colorings[main] = coloring
                coloring = merge_blocks(colorings, first, self.palette_size)
        return coloring

    def _peel(self, block: Graph, frames: List[Tuple[str, object, object]], allow_exact: bool) -> Graph:
        """Delete removal edges from a 2-connected piece while it stays 2-connected.

        A deletion that leaves a vertex of degree 1 splits off that pendant
        edge as a bridge block on the spot. The loop stops once the piece is
        small enough to rainbow-color, drops to max degree 4 (when exact
        search is still allowed) or gets a cut vertex some other way; it
        returns what is left. Every deletion is pushed as a frame on one
        shared PeelGraph, which the unwinding restores edge by edge.

        Raises:
            NoConfigurationError: the piece has max degree >= 5 and no configuration.
        """
        working = PeelGraph(block)
        index = configuration_index(working)
        while True:
            cfg = index.first()
            if cfg is None:
                logger.error(
                    "no configuration in a 2-connected piece: n=%d m=%d max degree %d",
                    working.n,
                    working.m,
                    working.max_degree,
                )
                raise NoConfigurationError(working.n, working.m, working.max_degree)
            u, v = cfg.removal_edge
            working.remove_edge(u, v)
            frames.append(("extend", working, cfg))
            ends = [u, v]
            for k, x in enumerate((u, v)):
                if working.degree(x) == 1:
                    (y,) = working.neighbors(x)
                    working.remove_edge(x, y)
                    frames.append(("bridge", working, (x, y)))
                    ends[k] = y
            if working.m <= self.palette_size:
                break
            if allow_exact and working.max_degree <= SMALL_DEGREE_BOUND:
                break
            a, b = ends
            if a == b or not (working.has_edge(a, b) or joined_by_two_paths(working, a, b)):
                logger.debug("deleting %d-%d left a cut vertex; splitting %d edges into blocks", u, v, working.m)
                break
            index.refresh(u, v, *ends)
        return working.freeze()

    def _small_degree(self, g: Graph) -> Optional[EdgeColoring]:
        for colors in (SMALL_DEGREE_COLORS, self.palette_size):
            try:
                found = exact_color_small(g, colors, node_limit=EXACT_NODE_LIMIT)
            except SearchLimitExceeded:
                logger.info("exact search with %d colors hit its node limit on %d edges", colors, g.m)
                continue
            if found is not None:
                return _widen(found, self.palette_size)
        return None


def _widen(coloring: EdgeColoring, palette_size: int) -> EdgeColoring:
    """Same colors, palette raised to ``palette_size``."""
    return EdgeColoring(coloring.n, palette_size, dict(coloring.items()))


def acyclic_color(g: Graph, fallback_radius: int = FALLBACK_RADIUS, strict: bool = False) -> EdgeColoring:
    """Acyclic edge coloring of ``g`` with at most max degree + 7 colors, verified."""
    return Colorizer(g, fallback_radius=fallback_radius, strict=strict).run()
