"""A 4- or 5-vertex v whose lightest neighbors have a small degree sum."""

from typing import List, Optional, Sequence

from models.configuration import ConfigKind, Configuration
from models.graph import Graph

from .base import BaseDetector


class A4Detector(BaseDetector):
    witness_keys = ("v", "u", "others", "disjunct")
    center_degree: int = 0

    def _match(self, g: Graph, v: int) -> Optional[Configuration]:
        if g.degree(v) != self.center_degree:
            return None
        ordered = sorted(g.neighbors(v), key=lambda x: (g.degree(x), x))
        for sequence, disjunct in self._candidates(g, v, ordered):
            return Configuration(
                kind=self.kind,
                witness={"v": v, "u": sequence[0], "others": tuple(sequence[1:]), "disjunct": disjunct},
                removal_edge=(sequence[0], v),
            )
        return None

    def _holds(self, g: Graph, cfg: Configuration) -> bool:
        v, u = cfg["v"], cfg["u"]
        others = tuple(cfg["others"])
        sequence = (u,) + others
        if g.degree(v) != self.center_degree or sorted(sequence) != list(g.neighbors(v)):
            return False
        if tuple(cfg.removal_edge) != (u, v):
            return False
        degrees = [g.degree(x) for x in sequence]
        if any(a > b for a, b in zip(degrees, degrees[1:])):
            return False
        return self._pattern(g, sequence, cfg["disjunct"])

    def _candidates(self, g: Graph, v: int, ordered: List[int]):
        if self._pattern(g, ordered, 1):
            yield ordered, 1

    def _pattern(self, g: Graph, sequence: Sequence[int], disjunct: int) -> bool:
        raise NotImplementedError


class A41Detector(A4Detector):
    """d(v) = 4, 4 <= d(u) <= 7 and d(u) + d(v_2) <= 17."""

    kind = ConfigKind.A4_1
    center_degree = 4

    def _pattern(self, g: Graph, sequence: Sequence[int], disjunct: int) -> bool:
        du, d2 = g.degree(sequence[0]), g.degree(sequence[1])
        return disjunct == 1 and 4 <= du <= 7 and du + d2 <= 17


class A42Detector(A4Detector):
    """d(v) = 5, 4 <= d(u) <= 6 and either d(u) + d(v_2) + d(v_3) <= 18,
    or d(u) = d(v_2) = 6, d(v_3) = d(v_4) = d(v_5) = 7 with uv_5 an edge."""

    kind = ConfigKind.A4_2
    center_degree = 5

    def _candidates(self, g: Graph, v: int, ordered: List[int]):
        if self._pattern(g, ordered, 1):
            yield ordered, 1
            return
        if [g.degree(x) for x in ordered] != [6, 6, 7, 7, 7]:
            return
        sixes, sevens = ordered[:2], ordered[2:]
        for u, v2 in (tuple(sixes), tuple(reversed(sixes))):
            for v5 in sevens:
                if not g.has_edge(u, v5):
                    continue
                middle = [x for x in sevens if x != v5]
                yield [u, v2] + middle + [v5], 2
                return

    def _pattern(self, g: Graph, sequence: Sequence[int], disjunct: int) -> bool:
        degrees = [g.degree(x) for x in sequence]
        if not 4 <= degrees[0] <= 6:
            return False
        if disjunct == 1:
            return degrees[0] + degrees[1] + degrees[2] <= 18
        if disjunct == 2:
            return (
                degrees[0] == degrees[1] == 6
                and degrees[2] == degrees[3] == degrees[4] == 7
                and g.has_edge(sequence[0], sequence[4])
            )
        return False
