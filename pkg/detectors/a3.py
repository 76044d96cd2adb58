"""A 3-vertex u next to a vertex v of degree 8 or less, 9 or 10 with shared neighbors."""

from typing import Optional

from analysis.structure import degree_census
from models.configuration import ConfigKind, Configuration
from models.graph import Graph

from .base import BaseDetector


class A3Detector(BaseDetector):
    witness_keys = ("u", "v", "u1", "u2")

    def _match(self, g: Graph, u: int) -> Optional[Configuration]:
        if g.degree(u) != 3:
            return None
        for v in g.neighbors(u):
            a, b = [x for x in g.neighbors(u) if x != v]
            for u1, u2 in ((a, b), (b, a)):
                if self._pattern(g, u, v, u1, u2):
                    return Configuration(
                        kind=self.kind,
                        witness={"u": u, "v": v, "u1": u1, "u2": u2},
                        removal_edge=(u, v),
                    )
        return None

    def _holds(self, g: Graph, cfg: Configuration) -> bool:
        u, v, u1, u2 = cfg["u"], cfg["v"], cfg["u1"], cfg["u2"]
        if not self._distinct(u, v, u1, u2) or g.degree(u) != 3:
            return False
        if sorted((v, u1, u2)) != list(g.neighbors(u)):
            return False
        if tuple(cfg.removal_edge) != (u, v):
            return False
        return self._pattern(g, u, v, u1, u2)

    def _pattern(self, g: Graph, u: int, v: int, u1: int, u2: int) -> bool:
        raise NotImplementedError


class A31Detector(A3Detector):
    kind = ConfigKind.A3_1

    def _pattern(self, g: Graph, u: int, v: int, u1: int, u2: int) -> bool:
        return g.degree(v) <= 8


class A32Detector(A3Detector):
    """d(v) = 9 and u2 is a common neighbor of u and v."""

    kind = ConfigKind.A3_2

    def _pattern(self, g: Graph, u: int, v: int, u1: int, u2: int) -> bool:
        return g.degree(v) == 9 and g.has_edge(v, u2)


class A33Detector(A3Detector):
    """d(v) = 10, n_{5-}(v) >= 5, and both other neighbors of u are adjacent to v."""

    kind = ConfigKind.A3_3

    def _pattern(self, g: Graph, u: int, v: int, u1: int, u2: int) -> bool:
        return (
            g.degree(v) == 10
            and degree_census(g, v).n_minus(5) >= 5
            and g.has_edge(v, u1)
            and g.has_edge(v, u2)
        )
