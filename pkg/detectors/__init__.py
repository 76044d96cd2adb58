"""Reducible configuration detectors in scan order."""

from typing import Dict, List, Optional

from models.configuration import ConfigKind, Configuration
from models.graph import Graph, PeelGraph

from .base import BaseDetector
from .a1 import A1Detector
from .a2 import A21Detector, A22Detector
from .a3 import A31Detector, A32Detector, A33Detector
from .a4 import A41Detector, A42Detector
from .index import ConfigurationIndex

# Scan order: kinds first, then vertices by id
DETECTORS: List[BaseDetector] = [
    A1Detector(),
    A21Detector(),
    A22Detector(),
    A31Detector(),
    A32Detector(),
    A33Detector(),
    A41Detector(),
    A42Detector(),
]

DETECTOR_BY_KIND: Dict[ConfigKind, BaseDetector] = {d.kind: d for d in DETECTORS}


def find_configuration(g: Graph) -> Optional[Configuration]:
    """Return the first configuration in scan order, or None."""
    for detector in DETECTORS:
        found = detector.find(g)
        if found is not None:
            return found
    return None


def configuration_index(g: PeelGraph) -> ConfigurationIndex:
    """An incremental index over ``g`` using the detectors in scan order."""
    return ConfigurationIndex(g, DETECTORS)


def check_configuration(g: Graph, cfg: Configuration) -> bool:
    """Validate a witness against its kind's predicate.

    Raises:
        MalformedWitnessError: witness fields missing or out of range.
    """
    return DETECTOR_BY_KIND[cfg.kind].check(g, cfg)


__all__ = [
    "BaseDetector",
    "ConfigurationIndex",
    "DETECTORS",
    "DETECTOR_BY_KIND",
    "find_configuration",
    "configuration_index",
    "check_configuration",
]
