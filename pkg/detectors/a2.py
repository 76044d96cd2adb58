"""A vertex u with a 2-neighbor and many neighbors of degree at most 8."""

from typing import Dict, Optional, Tuple

from analysis.structure import degree_census
from models.configuration import ConfigKind, Configuration
from models.graph import Graph

from .base import BaseDetector


class A2Detector(BaseDetector):
    """Shared outer guard: n_2(u) >= 1 and n_{8-}(u) >= d(u) - 8."""

    witness_keys = ("u", "v", "w", "neighbors", "far")

    def _match(self, g: Graph, u: int) -> Optional[Configuration]:
        if not self._guard(g, u):
            return None
        twos = [x for x in g.neighbors(u) if g.degree(x) == 2]
        v = twos[0]
        (w,) = [x for x in g.neighbors(v) if x != u]
        others = sorted((x for x in g.neighbors(u) if x != v), key=lambda x: (-g.degree(x), x))
        if others and g.degree(others[-1]) < 2:
            return None
        far: Dict[int, int] = {}
        for x in others:
            if g.degree(x) == 2:
                far[x] = next(y for y in g.neighbors(x) if y != u)
        return Configuration(
            kind=self.kind,
            witness={"u": u, "v": v, "w": w, "neighbors": tuple(others), "far": far},
            removal_edge=(u, v),
        )

    def _holds(self, g: Graph, cfg: Configuration) -> bool:
        u, v, w = cfg["u"], cfg["v"], cfg["w"]
        neighbors: Tuple[int, ...] = tuple(cfg["neighbors"])
        if not (self._distinct(u, v, w) and g.has_edge(u, v) and g.has_edge(v, w)):
            return False
        if g.degree(v) != 2 or tuple(cfg.removal_edge) != (u, v):
            return False
        if sorted(neighbors + (v,)) != list(g.neighbors(u)):
            return False
        degrees = [g.degree(x) for x in neighbors]
        if any(a < b for a, b in zip(degrees, degrees[1:])) or (degrees and degrees[-1] < 2):
            return False
        return self._guard(g, u)

    def _guard(self, g: Graph, u: int) -> bool:
        census = degree_census(g, u)
        d = g.degree(u)
        return census.n(2) >= 1 and census.n_minus(8) >= d - 8 and self._subcase(g, u)

    def _subcase(self, g: Graph, u: int) -> bool:
        raise NotImplementedError


class A21Detector(A2Detector):
    """n_{8-}(u) >= d(u) - 7."""

    kind = ConfigKind.A2_1

    def _subcase(self, g: Graph, u: int) -> bool:
        return degree_census(g, u).n_minus(8) >= g.degree(u) - 7


class A22Detector(A2Detector):
    """n_{8-}(u) = d(u) - 8 and n_2(u) >= d(u) - 9."""

    kind = ConfigKind.A2_2

    def _subcase(self, g: Graph, u: int) -> bool:
        census = degree_census(g, u)
        d = g.degree(u)
        return census.n_minus(8) == d - 8 and census.n(2) >= d - 9
