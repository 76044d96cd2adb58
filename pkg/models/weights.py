"""Weights, transfers and the discharging report."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

# (component index, face index within that component)
FaceKey = Tuple[int, int]


def fraction_text(value: Fraction) -> str:
    """Render as ``p/q`` (or ``p`` for integers)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def face_label(key: FaceKey) -> str:
    return f"c{key[0]}f{key[1]}"


@dataclass
class WeightAssignment:
    """Exact weights on vertices (original ids) and faces."""

    vertex_weights: Dict[int, Fraction] = field(default_factory=dict)
    face_weights: Dict[FaceKey, Fraction] = field(default_factory=dict)

    @property
    def total(self) -> Fraction:
        return sum(self.vertex_weights.values(), Fraction(0)) + sum(
            self.face_weights.values(), Fraction(0)
        )

    def copy(self) -> "WeightAssignment":
        return WeightAssignment(dict(self.vertex_weights), dict(self.face_weights))

    def merge(self, other: "WeightAssignment") -> None:
        self.vertex_weights.update(other.vertex_weights)
        self.face_weights.update(other.face_weights)

    def to_dict(self) -> dict:
        return {
            "vertices": {str(v): fraction_text(w) for v, w in sorted(self.vertex_weights.items())},
            "faces": {face_label(f): fraction_text(w) for f, w in sorted(self.face_weights.items())},
            "total": fraction_text(self.total),
        }


@dataclass(frozen=True)
class Transfer:
    """One vertex-to-face transfer with the rule row that produced it."""

    vertex: int
    face: FaceKey
    amount: Fraction
    rule: str
    label: str

    def to_dict(self) -> dict:
        return {
            "from": self.vertex,
            "to": face_label(self.face),
            "amount": fraction_text(self.amount),
            "rule": self.rule,
            "case": self.label,
        }


@dataclass(frozen=True)
class RuleAudit:
    """A (vertex, face) incidence whose rule matched several rows or none."""

    vertex: int
    face: FaceKey
    rule: str
    labels: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "face": face_label(self.face), "rule": self.rule, "rows": list(self.labels)}


@dataclass
class FaceCensus:
    """Per-face diagnostics: degree, minimum boundary H-degree, n_k(f)."""

    degree: int
    min_degree: Optional[int]
    vertex_degrees: Dict[int, int]
    bad: bool = False

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "min_vertex_degree": self.min_degree,
            "vertex_degrees": {str(k): c for k, c in sorted(self.vertex_degrees.items())},
            "bad": self.bad,
        }


@dataclass
class DischargeReport:
    """Full ledger of one discharging run over every component of H."""

    initial: WeightAssignment
    final: WeightAssignment
    transfers: List[Transfer] = field(default_factory=list)
    components: int = 0
    ambiguities: List[RuleAudit] = field(default_factory=list)
    unmatched: List[RuleAudit] = field(default_factory=list)
    face_counts: Dict[int, Dict[int, int]] = field(default_factory=dict)
    bad_face_counts: Dict[int, int] = field(default_factory=dict)
    face_census: Dict[FaceKey, FaceCensus] = field(default_factory=dict)

    @property
    def negatives(self) -> List[str]:
        """Elements whose final weight is below zero."""
        result = [f"v{v}" for v, w in sorted(self.final.vertex_weights.items()) if w < 0]
        result.extend(face_label(f) for f, w in sorted(self.final.face_weights.items()) if w < 0)
        return result

    @property
    def conserved(self) -> bool:
        return self.initial.total == self.final.total

    def to_dict(self) -> dict:
        return {
            "components": self.components,
            "initial": self.initial.to_dict(),
            "final": self.final.to_dict(),
            "transfers": [t.to_dict() for t in self.transfers],
            "negatives": self.negatives,
            "ambiguities": [a.to_dict() for a in self.ambiguities],
            "unmatched": [a.to_dict() for a in self.unmatched],
            "face_counts": {
                str(v): {str(k): c for k, c in sorted(counts.items())}
                for v, counts in sorted(self.face_counts.items())
            },
            "bad_faces": {str(v): c for v, c in sorted(self.bad_face_counts.items()) if c},
            "face_census": {face_label(f): c.to_dict() for f, c in sorted(self.face_census.items())},
        }
