"""Recoloring workspace types: multisets, extension context, traces."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Tuple

from .coloring import EdgeColoring
from .graph import Edge, Graph, normalize_edge


class MultiSet:
    """A set whose members carry multiplicities."""

    def __init__(self, items: Iterable[Hashable] = ()):
        self._counts: Counter = Counter(items)

    def mult(self, x: Hashable) -> int:
        return self._counts.get(x, 0)

    def join(self, other: "MultiSet") -> "MultiSet":
        """Multiset union adding multiplicities."""
        joined = MultiSet()
        joined._counts = self._counts + other._counts
        return joined

    __add__ = join

    @property
    def cardinality(self) -> int:
        return sum(self._counts.values())

    def __len__(self) -> int:
        return self.cardinality

    def __contains__(self, x: Hashable) -> bool:
        return self._counts.get(x, 0) > 0

    def __iter__(self) -> Iterator[Hashable]:
        return iter(sorted(self._counts))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiSet):
            return NotImplemented
        return +self._counts == +other._counts

    def __repr__(self) -> str:
        return f"MultiSet({dict(sorted(self._counts.items()))})"

    def support(self) -> FrozenSet:
        return frozenset(x for x, c in self._counts.items() if c > 0)

    def cardinality_within(self, members: Iterable[Hashable]) -> int:
        """||S ∩ X||: total multiplicity of the given members."""
        return sum(self.mult(x) for x in set(members))


@dataclass(frozen=True)
class ExtensionContext:
    """Color bookkeeping around an uncolored edge ``uv``.

    ``u_neighbors`` are u's other neighbors by degree (descending, then id);
    ``w_neighbors`` are v's other neighbors, those whose edge color is shared
    with C(u) first (by color), then the rest (by color). Maps keyed by a
    shared color ``i`` refer to w_i, the neighbor of v along color ``i``.
    """

    u: int
    v: int
    w: Optional[int]
    palette: FrozenSet[int]
    u_neighbors: Tuple[int, ...]
    w_neighbors: Tuple[int, ...]
    color_sets: Dict[int, FrozenSet[int]]
    degrees: Dict[int, int]
    shared: FrozenSet[int]
    free: FrozenSet[int]
    c_paths: Dict[int, FrozenSet[int]]
    t_sets: Dict[int, FrozenSet[int]]
    t_prime: Dict[int, FrozenSet[int]]
    t_zero: FrozenSet[int]
    kappa: Dict[int, int]
    s_v: MultiSet
    u_edge_colors: Dict[int, int]

    def colors(self, x: int) -> FrozenSet[int]:
        return self.color_sets.get(x, frozenset())

    def s_minus(self, bound: int) -> FrozenSet[int]:
        """S_{i-}: colors on edges from u to neighbors of degree at most ``bound``."""
        return frozenset(c for x, c in self.u_edge_colors.items() if self.degrees[x] <= bound)

    @property
    def missing_from_s_v(self) -> FrozenSet[int]:
        """C(u) minus the support of S_v."""
        return self.colors(self.u) - self.s_v.support()


@dataclass(frozen=True)
class Recolor:
    """One edge color change; ``None`` means uncolored."""

    u: int
    v: int
    before: Optional[int]
    after: Optional[int]

    def to_dict(self) -> dict:
        return {"edge": [self.u, self.v], "before": self.before, "after": self.after}

    @classmethod
    def from_dict(cls, data: dict) -> "Recolor":
        u, v = data["edge"]
        return cls(u, v, data.get("before"), data.get("after"))


@dataclass
class TraceStep:
    """One extension step: the configuration, the branch taken, the recolorings."""

    kind: str
    branch: str
    removal_edge: Edge
    operations: List[Recolor] = field(default_factory=list)
    fallback: bool = False

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "branch": self.branch,
            "removal_edge": list(self.removal_edge),
            "operations": [op.to_dict() for op in self.operations],
            "fallback": self.fallback,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TraceStep":
        return cls(
            kind=data["kind"],
            branch=data["branch"],
            removal_edge=tuple(data["removal_edge"]),
            operations=[Recolor.from_dict(op) for op in data.get("operations", [])],
            fallback=data.get("fallback", False),
        )


@dataclass
class ExtensionTrace:
    """Ordered extension steps of one coloring run."""

    steps: List[TraceStep] = field(default_factory=list)

    def record(self, step: TraceStep) -> int:
        self.steps.append(step)
        return len(self.steps) - 1

    @property
    def fallback_steps(self) -> List[int]:
        return [i for i, s in enumerate(self.steps) if s.fallback]

    def __len__(self) -> int:
        return len(self.steps)

    @staticmethod
    def replay(step: TraceStep, coloring: EdgeColoring) -> EdgeColoring:
        """Apply one step's operations to a copy of its pre-state."""
        result = coloring.copy()
        for op in step.operations:
            result.clear(op.u, op.v)
        for op in step.operations:
            final = _final_color(step, op.u, op.v)
            if final is not None and result.color(op.u, op.v) is None:
                result.assign(op.u, op.v, final)
        return result

    def to_lines(self) -> List[dict]:
        return [s.to_dict() for s in self.steps]


def _final_color(step: TraceStep, u: int, v: int) -> Optional[int]:
    target = normalize_edge(u, v)
    final = None
    for op in step.operations:
        if normalize_edge(op.u, op.v) == target:
            final = op.after
    return final


@dataclass
class ColorizerState:
    """Graph being extended, the fixed palette size and the shared trace."""

    graph: Graph
    palette_size: int
    coloring: Optional[EdgeColoring] = None
    trace: ExtensionTrace = field(default_factory=ExtensionTrace)
    fallback_radius: int = 6
    strict: bool = False
    fallback_incidents: int = 0
