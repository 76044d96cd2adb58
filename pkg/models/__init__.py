"""Data models for graphs, colorings, configurations and weights."""

from .graph import BlockTree, DegreeCensus, Edge, Graph, PeelGraph, normalize_edge
from .embedding import Face, PlaneEmbedding
from .coloring import BichromaticCycle, EdgeColoring, Verdict, Violation
from .configuration import ConfigKind, Configuration
from .weights import DischargeReport, Transfer, WeightAssignment
from .extension import (
    ColorizerState,
    ExtensionContext,
    ExtensionTrace,
    MultiSet,
    Recolor,
    TraceStep,
)

__all__ = [
    "BlockTree",
    "DegreeCensus",
    "Edge",
    "Graph",
    "PeelGraph",
    "normalize_edge",
    "Face",
    "PlaneEmbedding",
    "BichromaticCycle",
    "EdgeColoring",
    "Verdict",
    "Violation",
    "ConfigKind",
    "Configuration",
    "DischargeReport",
    "Transfer",
    "WeightAssignment",
    "ColorizerState",
    "ExtensionContext",
    "ExtensionTrace",
    "MultiSet",
    "Recolor",
    "TraceStep",
]
