"""Reducible configuration witnesses."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Tuple

from .graph import Edge


class ConfigKind(str, Enum):
    """Configuration families in detection order."""

    A1 = "A1"
    A2_1 = "A2_1"
    A2_2 = "A2_2"
    A3_1 = "A3_1"
    A3_2 = "A3_2"
    A3_3 = "A3_3"
    A4_1 = "A4_1"
    A4_2 = "A4_2"

    @property
    def family(self) -> str:
        """``A1`` .. ``A4``."""
        return self.value[:2]


@dataclass
class Configuration:
    """A matched configuration with its named witness vertices.

    Witness keys per family:
        A1: ``u``, ``v``, ``w``.
        A2: ``u``, ``v``, ``w``, ``neighbors`` (u_1..u_{d(u)-1}, degree
            non-increasing) and ``far`` (2-vertex neighbor -> its other neighbor).
        A3: ``u``, ``v``, ``u1``, ``u2``.
        A4: ``v``, ``u``, ``others`` (v_2..v_{d(v)}), ``disjunct`` (1 or 2).
    """

    kind: ConfigKind
    witness: Dict[str, Any] = field(default_factory=dict)
    removal_edge: Edge = (0, 0)

    def __getitem__(self, key: str) -> Any:
        return self.witness[key]

    @property
    def summary(self) -> str:
        u, v = self.removal_edge
        return f"{self.kind.value} removing {u}-{v}"

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        witness = {}
        for key, value in self.witness.items():
            if isinstance(value, dict):
                witness[key] = {str(k): v for k, v in sorted(value.items())}
            elif isinstance(value, tuple):
                witness[key] = list(value)
            else:
                witness[key] = value
        return {
            "kind": self.kind.value,
            "witness": witness,
            "removal_edge": list(self.removal_edge),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Configuration":
        """Create instance from dictionary."""
        witness: Dict[str, Any] = {}
        for key, value in data.get("witness", {}).items():
            if isinstance(value, dict):
                witness[key] = {int(k): v for k, v in value.items()}
            elif isinstance(value, list):
                witness[key] = tuple(value)
            else:
                witness[key] = value
        edge: Tuple[int, int] = tuple(data["removal_edge"])  # type: ignore[assignment]
        return cls(kind=ConfigKind(data["kind"]), witness=witness, removal_edge=edge)
