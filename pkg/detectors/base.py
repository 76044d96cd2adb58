"""Base detector class with shared witness checks."""

from abc import ABC, abstractmethod
from typing import Iterable, Optional, Sequence

from models.configuration import ConfigKind, Configuration
from models.errors import MalformedWitnessError
from models.graph import Graph


class BaseDetector(ABC):
    """Abstract base class for configuration detectors.

    Subclasses set ``kind`` and ``witness_keys`` and implement ``_match``
    (search anchored at one vertex) and ``_holds`` (predicate on a complete
    witness).
    """

    kind: ConfigKind
    witness_keys: Sequence[str] = ()

    def find(self, g: Graph) -> Optional[Configuration]:
        """First match scanning anchor vertices in increasing id."""
        for anchor in range(g.n):
            found = self.match_at(g, anchor)
            if found is not None:
                return found
        return None

    def match_at(self, g: Graph, anchor: int) -> Optional[Configuration]:
        """The configuration anchored at ``anchor``, or None."""
        return self._match(g, anchor)

    def check(self, g: Graph, cfg: Configuration) -> bool:
        """True iff ``cfg`` is a valid witness of this detector's kind in ``g``.

        Raises:
            MalformedWitnessError: missing keys or out-of-range vertices.
        """
        if cfg.kind != self.kind:
            return False
        missing = [k for k in self.witness_keys if k not in cfg.witness]
        if missing:
            raise MalformedWitnessError(f"{cfg.kind.value} witness lacks {', '.join(missing)}")
        for value in self._vertices(cfg):
            if not isinstance(value, int) or not 0 <= value < g.n:
                raise MalformedWitnessError(f"witness vertex {value!r} not in graph")
        return self._holds(g, cfg)

    def _vertices(self, cfg: Configuration) -> Iterable:
        for key in self.witness_keys:
            value = cfg.witness[key]
            if isinstance(value, (tuple, list)):
                yield from value
            elif isinstance(value, dict):
                yield from value.keys()
                yield from value.values()
            elif key != "disjunct":
                yield value

    @staticmethod
    def _distinct(*vertices: int) -> bool:
        return len(set(vertices)) == len(vertices)

    @abstractmethod
    def _match(self, g: Graph, anchor: int) -> Optional[Configuration]:
        """Return a configuration anchored at ``anchor`` or None."""

    @abstractmethod
    def _holds(self, g: Graph, cfg: Configuration) -> bool:
        """Evaluate the kind's degree and adjacency predicate on ``cfg``."""
