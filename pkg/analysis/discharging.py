"""Exact discharging over the 2-vertex-stripped plane graph H."""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from models.embedding import Face, PlaneEmbedding
from models.errors import ConservationError, DisconnectedGraphError, EmbeddingError
from models.graph import Graph
from models.weights import (
    DischargeReport,
    FaceCensus,
    FaceKey,
    RuleAudit,
    Transfer,
    WeightAssignment,
)

from .structure import HComponent, degree_census, enumerate_faces, strip_two_vertices

logger = logging.getLogger(__name__)

COMPONENT_TOTAL = Fraction(-12)


@dataclass(frozen=True)
class TransferContext:
    """Everything a rule row may look at for one incidence of ``y`` on a face.

    ``x`` and ``z`` are y's neighbors along the boundary with
    ``deg_x >= deg_z`` (H-degrees). ``n7_*`` and ``n4_*`` count neighbors of
    degree at most 7 / exactly 4 in the input graph.
    """

    deg_y: int
    deg_x: int
    deg_z: int
    face_degree: int
    n7_y: int = 0
    n4_y: int = 0
    n7_z: int = 0
    n4_z: int = 0
    n4_x: int = 0


@dataclass(frozen=True)
class RuleMatch:
    rule: str
    label: str
    amount: Fraction
    alternatives: Tuple[str, ...] = ()
    missing: bool = False


Row = Tuple[str, Callable[[TransferContext], bool], Fraction]


class DischargeRules:
    """Transfer tables; within a table the first matching row wins."""

    R1_ROWS: List[Row] = [
        ("n7(y)=0", lambda t: t.n7_y == 0, Fraction(1, 2)),
        ("n7(y)=1, z<=7", lambda t: t.n7_y == 1 and t.deg_z <= 7, Fraction(4, 5)),
        ("n7(y)=1, z>=8", lambda t: t.n7_y == 1 and t.deg_z >= 8, Fraction(1, 5)),
    ]

    # d_H(y) = 5 on a 3-face, or on a 4-/5-face whose weaker neighbor is a 9+-vertex
    R2_TABLE: List[Row] = [
        ("x=5, z=5", lambda t: t.deg_x == 5 and t.deg_z == 5, Fraction(7, 5)),
        ("x=6, z=5", lambda t: t.deg_x == 6 and t.deg_z == 5, Fraction(6, 5)),
        ("x=7, z=5", lambda t: t.deg_x == 7 and t.deg_z == 5, Fraction(13, 14)),
        ("x=8, z=5", lambda t: t.deg_x == 8 and t.deg_z == 5, Fraction(1)),
        ("x>=9, z=5", lambda t: t.deg_x >= 9 and t.deg_z == 5, Fraction(11, 12)),
        ("x=6, z=6", lambda t: t.deg_x == 6 and t.deg_z == 6, Fraction(1)),
        ("x=7, z=6", lambda t: t.deg_x == 7 and t.deg_z == 6, Fraction(6, 7)),
        ("x=8, z=6", lambda t: t.deg_x == 8 and t.deg_z == 6, Fraction(3, 4)),
        ("x>=9, z=6", lambda t: t.deg_x >= 9 and t.deg_z == 6, Fraction(2, 3)),
        ("x=7, z=7", lambda t: t.deg_x == 7 and t.deg_z == 7, Fraction(5, 7)),
        ("x>=8, z=7", lambda t: t.deg_x >= 8 and t.deg_z == 7, Fraction(9, 14)),
        ("z=8", lambda t: t.deg_z == 8, Fraction(1, 2)),
        ("z>=9", lambda t: t.deg_z >= 9, Fraction(1, 3)),
    ]

    # d_H(y) >= 10 on a 3-face whose weaker neighbor is a 5- -vertex
    R4_TABLE: List[Row] = [
        ("z=3", lambda t: t.deg_z == 3, Fraction(3, 2)),
        ("z=4, n7(z)=1", lambda t: t.deg_z == 4 and t.n7_z == 1, Fraction(7, 5)),
        ("z=4, n7(z)=0", lambda t: t.deg_z == 4 and t.n7_z == 0, Fraction(5, 4)),
        ("z=5, n4(z)>=1, x>=10", lambda t: t.deg_z == 5 and t.n4_z >= 1 and t.deg_x >= 10, Fraction(11, 10)),
        (
            "z=5, n4(z)>=1, 6<=x<=9",
            lambda t: t.deg_z == 5 and t.n4_z >= 1 and 6 <= t.deg_x <= 9,
            Fraction(5, 4),
        ),
        (
            "x=z=5, n4(z)>=1 or n4(x)>=1",
            lambda t: t.deg_x == 5 and t.deg_z == 5 and (t.n4_z >= 1 or t.n4_x >= 1),
            Fraction(7, 5),
        ),
        (
            "z=5, n4(z)=0, n4(x)=0 if x=5",
            lambda t: t.deg_z == 5 and t.n4_z == 0 and (t.deg_x != 5 or t.n4_x == 0),
            Fraction(4, 3),
        ),
    ]

    @classmethod
    def match(cls, t: TransferContext) -> Optional[RuleMatch]:
        """Rule and row for one incidence; None when no rule sends anything."""
        k = t.deg_y
        if k == 4:
            return cls._from_table("R1", cls.R1_ROWS, t)
        if k == 5:
            if t.n4_y >= 1:
                return RuleMatch("R2", "n4(y)>=1", Fraction(4, 5))
            if 4 <= t.face_degree <= 5 and t.deg_z <= 8:
                return RuleMatch("R2", "4<=d(f)<=5, z<=8", Fraction(1, 2))
            if t.face_degree == 3 or (4 <= t.face_degree <= 5 and t.deg_z >= 9):
                return cls._from_table("R2", cls.R2_TABLE, t)
            return None
        if 6 <= k <= 9:
            return RuleMatch("R3", f"k={k}", Fraction(2 * k - 6, k))
        if k >= 10:
            if 4 <= t.face_degree <= 5 or (t.face_degree == 3 and t.deg_z >= 6):
                return RuleMatch("R4", "4<=d(f)<=5 or z>=6", Fraction(1))
            if t.face_degree == 3:
                return cls._from_table("R4", cls.R4_TABLE, t)
        return None

    @staticmethod
    def _from_table(rule: str, rows: List[Row], t: TransferContext) -> RuleMatch:
        hits = [(label, value) for label, predicate, value in rows if predicate(t)]
        if not hits:
            return RuleMatch(rule, "no row", Fraction(0), missing=True)
        label, value = hits[0]
        return RuleMatch(rule, label, value, alternatives=tuple(h[0] for h in hits[1:]))


def initial_weights(
    h: Graph,
    emb: PlaneEmbedding,
    component: int = 0,
    to_original: Optional[Tuple[int, ...]] = None,
) -> WeightAssignment:
    """w(u) = 2 d_H(u) - 6 and w(f) = d(f) - 6 on one connected plane graph.

    Raises:
        DisconnectedGraphError: ``h`` has more than one component.
        EmbeddingError: face tracing fails the Euler check.
        ConservationError: the total is not -12.
    """
    if len(h.components()) != 1:
        raise DisconnectedGraphError(f"expected one component, got {len(h.components())}")
    faces = enumerate_faces(h, emb)
    original = to_original or tuple(range(h.n))
    weights = WeightAssignment()
    for v in range(h.n):
        weights.vertex_weights[original[v]] = Fraction(2 * h.degree(v) - 6)
    for index, face in enumerate(faces):
        weights.face_weights[(component, index)] = Fraction(face.degree - 6)
    if weights.total != COMPONENT_TOTAL:
        raise ConservationError(f"initial weights total {weights.total}, expected -12")
    return weights


def _contexts(comp: HComponent, g: Graph, y: int, face: Face) -> List[TransferContext]:
    h = comp.graph
    census_y = degree_census(g, comp.original(y))
    contexts = []
    for previous, following in face.incidences(y):
        x, z = sorted((previous, following), key=lambda a: (-h.degree(a), a))
        census_x = degree_census(g, comp.original(x))
        census_z = degree_census(g, comp.original(z))
        contexts.append(
            TransferContext(
                deg_y=h.degree(y),
                deg_x=h.degree(x),
                deg_z=h.degree(z),
                face_degree=face.degree,
                n7_y=census_y.n_minus(7),
                n4_y=census_y.n(4),
                n7_z=census_z.n_minus(7),
                n4_z=census_z.n(4),
                n4_x=census_x.n(4),
            )
        )
    return contexts


def transfer_amount(comp: HComponent, g: Graph, emb: PlaneEmbedding, y: int, face: Face) -> Fraction:
    """Total weight ``y`` sends to ``face`` (summed over its occurrences on the walk).

    ``y`` and ``face`` use the component's local ids; censuses n_k are read
    from the input graph ``g``.

    Raises:
        ValueError: ``y`` is not on the boundary of ``face``.
    """
    if y not in face.vertices or not face.walk:
        raise ValueError(f"vertex {y} is not on the face boundary")
    total = Fraction(0)
    for context in _contexts(comp, g, y, face):
        found = DischargeRules.match(context)
        if found is not None:
            total += found.amount
    return total


def discharge(g: Graph, emb: PlaneEmbedding) -> DischargeReport:
    """Run the rules on every component of H and return the full ledger.

    ``emb`` is a rotation system over the vertex ids of ``g``; entries for
    stripped vertices are dropped when restricting to each component.

    Raises:
        EmbeddingError: the restricted embedding does not fit some component.
        ConservationError: totals changed (never expected).
    """
    if emb.n != g.n:
        raise EmbeddingError(f"rotation system has {emb.n} vertices, graph has {g.n}")
    stripped = strip_two_vertices(g)
    initial = WeightAssignment()
    transfers: List[Transfer] = []
    report = DischargeReport(initial=initial, final=initial)

    for index, comp in enumerate(stripped.components):
        local_emb = emb.restrict(comp.to_original)
        weights = initial_weights(comp.graph, local_emb, component=index, to_original=comp.to_original)
        initial.merge(weights)
        faces = enumerate_faces(comp.graph, local_emb)
        h = comp.graph
        incident: Dict[int, Counter] = {v: Counter() for v in range(h.n)}

        for face_index, face in enumerate(faces):
            key: FaceKey = (index, face_index)
            boundary = face.vertices
            degrees = Counter(h.degree(x) for x in boundary)
            bad = face.degree == 3 and any(h.degree(x) == 3 for x in boundary)
            report.face_census[key] = FaceCensus(
                degree=face.degree,
                min_degree=min((h.degree(x) for x in boundary), default=None),
                vertex_degrees=dict(degrees),
                bad=bad,
            )
            for y in sorted(set(boundary)):
                incident[y][face.degree] += 1
                if bad:
                    report.bad_face_counts[comp.original(y)] = report.bad_face_counts.get(comp.original(y), 0) + 1
            if not face.walk:
                continue
            for y in sorted(set(boundary)):
                for context in _contexts(comp, g, y, face):
                    found = DischargeRules.match(context)
                    if found is None:
                        continue
                    origin = comp.original(y)
                    if found.alternatives:
                        report.ambiguities.append(
                            RuleAudit(origin, key, found.rule, (found.label,) + found.alternatives)
                        )
                    if found.missing:
                        report.unmatched.append(RuleAudit(origin, key, found.rule, ()))
                        continue
                    transfers.append(Transfer(origin, key, found.amount, found.rule, found.label))

        for v in range(h.n):
            report.face_counts[comp.original(v)] = dict(incident[v])

    final = initial.copy()
    for t in transfers:
        final.vertex_weights[t.vertex] -= t.amount
        final.face_weights[t.face] += t.amount
    if final.total != initial.total:
        raise ConservationError(f"discharging moved total from {initial.total} to {final.total}")

    report.final = final
    report.transfers = transfers
    report.components = len(stripped.components)
    logger.info(
        "discharged %d components: %d transfers, %d negative elements",
        report.components, len(transfers), len(report.negatives),
    )
    return report


def needs_manual_review(g: Graph, report: DischargeReport) -> bool:
    """True when no configuration exists yet every final weight is non-negative.

    Only meaningful for 2-connected graphs with maximum degree at least 5;
    returns False otherwise.
    """
    from detectors import find_configuration
    from .structure import is_biconnected_block

    if g.max_degree < 5 or not is_biconnected_block(g):
        return False
    return find_configuration(g) is None and not report.negatives
