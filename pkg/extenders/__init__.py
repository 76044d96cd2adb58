"""Extenders: recolor a coloring of G - uv into one of G, per configuration family."""

from typing import Dict, Tuple, Type

from models.coloring import EdgeColoring
from models.configuration import ConfigKind, Configuration
from models.extension import TraceStep
from models.graph import Graph

from .base import BaseExtender
from .a1 import A1Extender
from .a2 import A2Extender
from .a3 import A3Extender
from .a4 import A4Extender
from .context import build_context
from .fallback import FallbackSearch, fallback_extend

EXTENDERS: Dict[ConfigKind, Type[BaseExtender]] = {
    kind: extender for extender in (A1Extender, A2Extender, A3Extender, A4Extender) for kind in extender.kinds
}


def extend_coloring(
    graph: Graph,
    cfg: Configuration,
    coloring: EdgeColoring,
    palette_size: int,
    strict: bool = False,
) -> Tuple[EdgeColoring, TraceStep]:
    """Extend an acyclic coloring of ``graph`` minus the removal edge with the family's moves.

    Raises:
        BranchMismatchError: no move of the family applies.
    """
    extender = EXTENDERS[cfg.kind](graph, cfg, coloring, palette_size, strict=strict)
    return extender.run()


__all__ = [
    "BaseExtender",
    "A1Extender",
    "A2Extender",
    "A3Extender",
    "A4Extender",
    "EXTENDERS",
    "FallbackSearch",
    "build_context",
    "extend_coloring",
    "fallback_extend",
]
