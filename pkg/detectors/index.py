"""Matching anchors of every detector, kept current while edges are deleted."""

from typing import List, Optional, Set

from models.configuration import Configuration
from models.graph import PeelGraph

from .base import BaseDetector

# A match at an anchor reads degrees and adjacency at distance at most 2
MATCH_RADIUS = 2


class ConfigurationIndex:
    """Anchors that match each detector on a PeelGraph.

    ``first`` returns what ``find_configuration`` would return on the
    current graph: the earliest detector in scan order, at its smallest
    anchor. After deleting or restoring an edge, ``refresh`` rechecks only
    the anchors near its endpoints.
    """

    def __init__(self, g: PeelGraph, detectors: List[BaseDetector]):
        self.g = g
        self.detectors = detectors
        self._anchors: List[Set[int]] = [
            {a for a in range(g.n) if d.match_at(g, a) is not None} for d in detectors
        ]

    def first(self) -> Optional[Configuration]:
        for detector, anchors in zip(self.detectors, self._anchors):
            if anchors:
                return detector.match_at(self.g, min(anchors))
        return None

    def refresh(self, *centers: int) -> int:
        """Recheck anchors within MATCH_RADIUS of ``centers``; returns how many."""
        ball = self._ball(centers)
        for detector, anchors in zip(self.detectors, self._anchors):
            for a in ball:
                if detector.match_at(self.g, a) is None:
                    anchors.discard(a)
                else:
                    anchors.add(a)
        return len(ball)

    def _ball(self, centers) -> Set[int]:
        ball = set(centers)
        frontier = set(centers)
        for _ in range(MATCH_RADIUS):
            frontier = {y for x in frontier for y in self.g.neighbors(x)} - ball
            ball |= frontier
        return ball
