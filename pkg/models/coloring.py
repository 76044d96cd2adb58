"""Partial and total edge colorings."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from .errors import ImproperColoringError
from .graph import Edge, Graph, normalize_edge


class EdgeColoring:
    """Mapping from edges to colors ``1..palette_size``; missing edges are uncolored.

    A per-vertex index ``color -> neighbor`` is kept alongside the edge map,
    so assignments that would make two edges at a vertex share a color are
    refused. Colors outside the palette are stored as given and only
    rejected by verification.

    With ``strict=False`` clashing assignments are stored anyway (for
    verifying colorings read from files); the index then points at the
    first holder of each color and ``clashes`` lists the rest.
    """

    def __init__(
        self,
        n: int,
        palette_size: int,
        assignment: Optional[Dict[Edge, int]] = None,
        strict: bool = True,
    ):
        self.n = n
        self.palette_size = palette_size
        self.strict = strict
        self.clashes: List[Edge] = []
        self._colors: Dict[Edge, int] = {}
        self._at: List[Dict[int, int]] = [dict() for _ in range(n)]
        for (u, v), color in sorted((assignment or {}).items()):
            self.assign(u, v, color)

    def color(self, u: int, v: int) -> Optional[int]:
        return self._colors.get(normalize_edge(u, v))

    def assign(self, u: int, v: int, color: int) -> None:
        """Color edge ``uv``, replacing any previous color.

        Raises:
            ImproperColoringError: another edge at ``u`` or ``v`` has ``color``.
        """
        if color < 1:
            raise ValueError(f"colors are positive integers, got {color}")
        edge = normalize_edge(u, v)
        old = self._colors.get(edge)
        if old == color:
            return
        clash = False
        for x, y in ((u, v), (v, u)):
            holder = self._at[x].get(color)
            if holder is not None and holder != y:
                if self.strict:
                    raise ImproperColoringError(x, normalize_edge(x, holder), edge, color)
                clash = True
        if clash:
            self._colors[edge] = color
            self.clashes.append(edge)
            self._reindex()
            return
        if old is not None:
            self._drop_index(u, v, old)
        self._colors[edge] = color
        self._at[u][color] = v
        self._at[v][color] = u

    def clear(self, u: int, v: int) -> Optional[int]:
        """Uncolor edge ``uv`` and return its former color."""
        edge = normalize_edge(u, v)
        old = self._colors.pop(edge, None)
        if old is None:
            return None
        if self.clashes:
            if edge in self.clashes:
                self.clashes.remove(edge)
            self._reindex()
        else:
            self._drop_index(u, v, old)
        return old

    def _drop_index(self, u: int, v: int, color: int) -> None:
        if self._at[u].get(color) == v:
            del self._at[u][color]
        if self._at[v].get(color) == u:
            del self._at[v][color]

    def _reindex(self) -> None:
        self._at = [dict() for _ in range(self.n)]
        for (u, v), color in sorted(self._colors.items()):
            self._at[u].setdefault(color, v)
            self._at[v].setdefault(color, u)

    def colors_at(self, v: int) -> FrozenSet[int]:
        """C(v): colors on the colored edges at ``v``."""
        return frozenset(self._at[v])

    def neighbor_via(self, v: int, color: int) -> Optional[int]:
        """The neighbor joined to ``v`` by the edge of ``color``, if any."""
        return self._at[v].get(color)

    def can_take(self, u: int, v: int, color: int) -> bool:
        """True if ``uv`` could be colored ``color`` without a clash at either end."""
        for x, y in ((u, v), (v, u)):
            holder = self._at[x].get(color)
            if holder is not None and holder != y:
                return False
        return True

    def items(self) -> List[Tuple[Edge, int]]:
        return sorted(self._colors.items())

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self._colors))

    def __len__(self) -> int:
        return len(self._colors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self._colors == other._colors

    def __repr__(self) -> str:
        return f"EdgeColoring(colored={len(self._colors)}, palette={self.palette_size})"

    def copy(self) -> "EdgeColoring":
        clone = EdgeColoring(self.n, self.palette_size, strict=self.strict)
        clone.clashes = list(self.clashes)
        clone._colors = dict(self._colors)
        clone._at = [dict(a) for a in self._at]
        return clone

    def colors_used(self) -> FrozenSet[int]:
        return frozenset(self._colors.values())

    @property
    def max_color(self) -> int:
        return max(self._colors.values(), default=0)

    def uncolored_edges(self, g: Graph) -> List[Edge]:
        return [e for e in g.edges if e not in self._colors]

    def to_dict(self) -> dict:
        return {
            "palette_size": self.palette_size,
            "colors": [[u, v, c] for (u, v), c in self.items()],
        }

    @classmethod
    def from_dict(cls, data: dict, n: int) -> "EdgeColoring":
        return cls(n, data["palette_size"], {(u, v): c for u, v, c in data["colors"]})


@dataclass(frozen=True)
class Violation:
    """Two edges at ``vertex`` sharing ``color``."""

    vertex: int
    first: Edge
    second: Edge
    color: int


@dataclass(frozen=True)
class BichromaticCycle:
    """A cycle whose edges alternate between two colors."""

    vertices: Tuple[int, ...]
    colors: Tuple[int, int]

    @property
    def edges(self) -> List[Edge]:
        k = len(self.vertices)
        return [normalize_edge(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "colors": list(self.colors)}


@dataclass(frozen=True)
class Verdict:
    """Outcome of full verification.

    ``reason`` is one of ``incomplete``, ``improper``, ``palette``, ``cycle``
    when rejected.
    """

    accepted: bool
    reason: Optional[str] = None
    detail: str = ""
    cycle: Optional[BichromaticCycle] = None
    violation: Optional[Violation] = None

    def __bool__(self) -> bool:
        return self.accepted

    def to_dict(self) -> dict:
        data = {"accepted": self.accepted, "reason": self.reason, "detail": self.detail}
        if self.cycle is not None:
            data["cycle"] = self.cycle.to_dict()
        return data
