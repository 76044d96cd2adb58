"""A path uvw through a 2-vertex v whose end u has degree at most 9."""

from typing import Optional

from models.configuration import ConfigKind, Configuration
from models.graph import Graph

from .base import BaseDetector


class A1Detector(BaseDetector):
    kind = ConfigKind.A1
    witness_keys = ("u", "v", "w")

    def _match(self, g: Graph, anchor: int) -> Optional[Configuration]:
        if g.degree(anchor) != 2:
            return None
        a, b = g.neighbors(anchor)
        for u, w in ((a, b), (b, a)):
            if g.degree(u) <= 9:
                return Configuration(
                    kind=self.kind,
                    witness={"u": u, "v": anchor, "w": w},
                    removal_edge=(u, anchor),
                )
        return None

    def _holds(self, g: Graph, cfg: Configuration) -> bool:
        u, v, w = cfg["u"], cfg["v"], cfg["w"]
        return (
            self._distinct(u, v, w)
            and g.has_edge(u, v)
            and g.has_edge(v, w)
            and g.degree(v) == 2
            and g.degree(u) <= 9
            and tuple(cfg.removal_edge) == (u, v)
        )
