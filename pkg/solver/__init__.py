"""Coloring drivers: the max degree + 7 colorizer, exact search and the oracle."""

from .colorizer import (
    Colorizer,
    acyclic_color,
    attach_pendant,
    extend_coloring,
    fallback_extend,
    merge_blocks,
    palette_for,
    rainbow,
)
from .exact import degeneracy_order, exact_color_small
from .oracle import accepts, exact_acyclic_index

__all__ = [
    "Colorizer",
    "acyclic_color",
    "attach_pendant",
    "extend_coloring",
    "fallback_extend",
    "merge_blocks",
    "palette_for",
    "rainbow",
    "degeneracy_order",
    "exact_color_small",
    "accepts",
    "exact_acyclic_index",
]
