"""Base extender class with the journaled recoloring workspace."""

import logging
from abc import ABC, abstractmethod
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from analysis.acyclic import alternating_path, verify_acyclic, verify_local
from config import EXTENSION_ATTEMPT_BUDGET
from models.coloring import EdgeColoring
from models.configuration import ConfigKind, Configuration
from models.errors import BranchMismatchError
from models.extension import ExtensionContext, Recolor, TraceStep
from models.graph import Edge, Graph, normalize_edge

from .context import build_context

logger = logging.getLogger(__name__)

Change = Tuple[Edge, int]
Mark = Tuple[int, int]


class _OutOfAttempts(Exception):
    pass


class BaseExtender(ABC):
    """Abstract base class for configuration extenders.

    An extender receives an acyclic coloring of G - uv and tries the moves
    of its configuration family, in order, until ``uv`` is colored and no
    bichromatic cycle passes through any edge it touched. Every change is
    journaled so a failed branch is rolled back exactly.
    """

    kinds: Tuple[ConfigKind, ...] = ()

    def __init__(
        self,
        graph: Graph,
        cfg: Configuration,
        coloring: EdgeColoring,
        palette_size: int,
        strict: bool = False,
        budget: int = EXTENSION_ATTEMPT_BUDGET,
    ):
        self.graph = graph
        self.cfg = cfg
        self.coloring = coloring.copy()
        self.palette_size = palette_size
        self.palette = range(1, palette_size + 1)
        self.strict = strict
        self.budget = budget
        self.u, self.v = cfg.removal_edge
        self._journal: List[Tuple[Edge, Optional[int]]] = []
        self._labels: List[str] = []
        self._spent = 0

    def run(self) -> Tuple[EdgeColoring, TraceStep]:
        """Extend the coloring to ``uv``.

        Raises:
            BranchMismatchError: no move of this family produced a valid coloring.
        """
        try:
            done = self._extend()
        except _OutOfAttempts:
            logger.debug("%s: attempt budget of %d spent", self.cfg.summary, self.budget)
            done = False
        if not done or self.coloring.color(self.u, self.v) is None:
            raise BranchMismatchError(self.cfg.kind.value, self._labels[-1] if self._labels else "")
        step = TraceStep(
            kind=self.cfg.kind.value,
            branch=" > ".join(self._labels),
            removal_edge=normalize_edge(self.u, self.v),
            operations=self._net_changes(),
        )
        logger.debug("%s: %s after %d attempts", self.cfg.summary, step.branch, self._spent)
        return self.coloring, step

    @abstractmethod
    def _extend(self) -> bool:
        """Try the family's moves; leave the coloring extended and return True on success."""
        pass

    # Color bookkeeping

    def C(self, x: int) -> FrozenSet[int]:
        return self.coloring.colors_at(x)

    def color(self, a: int, b: int) -> Optional[int]:
        return self.coloring.color(a, b)

    def nbr(self, x: int, color: int) -> Optional[int]:
        return self.coloring.neighbor_via(x, color)

    def free(self) -> List[int]:
        """Colors missing at both ends of ``uv``, smallest first."""
        return self.missing_at(self.u, self.v)

    def shared(self) -> List[int]:
        """C(u) ∩ C(v), smallest first."""
        return self.ordered(self.C(self.u) & self.C(self.v))

    def missing_at(self, *vertices: int) -> List[int]:
        taken = set()
        for x in vertices:
            taken |= self.C(x)
        return [c for c in self.palette if c not in taken]

    def path(self, a: Optional[int], b: Optional[int], i: int, j: int) -> bool:
        """True if an (i, j)-alternating path joins ``a`` and ``b``."""
        self._tick()
        if a is None or b is None or i == j:
            return False
        return alternating_path(self.coloring, a, b, i, j) is not None

    def closes(self, start: int, first: int, second: int) -> bool:
        """True if the walk leaving ``start`` along ``first``, then alternating, comes back to it."""
        self._tick()
        x, color = start, first
        while True:
            y = self.nbr(x, color)
            if y is None:
                return False
            if y == start:
                return True
            x, color = y, second if color == first else first

    def context(self, w: Optional[int] = None) -> ExtensionContext:
        return build_context(self.graph, self.coloring, self.u, self.v, self.palette_size, w=w)

    # Journal

    def mark(self) -> Mark:
        return (len(self._journal), len(self._labels))

    def rollback(self, mark: Mark) -> None:
        journal_size, label_count = mark
        while len(self._journal) > journal_size:
            edge, old = self._journal.pop()
            self.coloring.clear(*edge)
            if old is not None:
                self.coloring.assign(edge[0], edge[1], old)
        del self._labels[label_count:]

    def _set(self, edge: Edge, color: Optional[int]) -> None:
        self._journal.append((edge, self.coloring.color(*edge)))
        if color is None:
            self.coloring.clear(*edge)
        else:
            self.coloring.assign(edge[0], edge[1], color)

    def _tick(self) -> None:
        self._spent += 1
        if self._spent > self.budget:
            raise _OutOfAttempts()

    def changed_since(self, mark: Mark) -> List[Edge]:
        seen: Dict[Edge, None] = {}
        for edge, _ in self._journal[mark[0]:]:
            seen.setdefault(edge, None)
        return [e for e in seen if self.coloring.color(*e) is not None]

    # Moves

    def apply(self, label: str, changes: Sequence[Change], check_cycles: bool = True) -> bool:
        """Recolor edges together; refuse clashes and, unless deferred, new bichromatic cycles."""
        self._tick()
        mark = self.mark()
        normalized = [(normalize_edge(*edge), color) for edge, color in changes]
        for edge, _ in normalized:
            self._set(edge, None)
        for edge, color in normalized:
            if color is None or color not in self.palette or not self.coloring.can_take(edge[0], edge[1], color):
                self.rollback(mark)
                return False
            self._set(edge, color)
        if check_cycles and verify_local(self.coloring, [e for e, _ in normalized]) is not None:
            self.rollback(mark)
            return False
        self._labels.append(label)
        return True

    def attempt(self, label: str, changes: Sequence[Change], uv_color: int, since: Optional[Mark] = None) -> bool:
        """Apply ``changes``, color ``uv`` with ``uv_color``, keep the result if it passes the gate."""
        mark = self.mark()
        if not self.apply(label, list(changes) + [((self.u, self.v), uv_color)], check_cycles=False):
            return False
        if self._gate(since if since is not None else mark):
            return True
        self.rollback(mark)
        return False

    def attempt_any(self, label: str, changes: Sequence[Change]) -> bool:
        """Apply ``changes`` then try every color left free for ``uv``."""
        mark = self.mark()
        if not self.apply(label, changes, check_cycles=False):
            return False
        for a in self.free():
            if self.attempt(label, [], a, since=mark):
                return True
        self.rollback(mark)
        return False

    def reduce(self, label: str, changes: Sequence[Change], then: Callable[[], bool]) -> bool:
        """Apply ``changes`` when they shrink C(u) ∩ C(v), then hand over to ``then``."""
        before = len(self.shared())
        mark = self.mark()
        if self.apply(label, changes) and len(self.shared()) < before and then():
            return True
        self.rollback(mark)
        return False

    def no_shared_path(self, label: str) -> bool:
        """Color uv with a free j that no shared color i joins by an (i, j)-path from u to v."""
        shared = self.shared()
        for j in self.free():
            if all(not self.path(self.u, self.v, i, j) for i in shared) and self.attempt(label, [], j):
                return True
        return False

    def finish(self, label: str, since: Optional[Mark] = None) -> bool:
        """Color ``uv`` with the first free color that passes the gate."""
        for a in self.free():
            if self.attempt(label, [], a, since=since):
                return True
        return False

    def _gate(self, mark: Mark) -> bool:
        if verify_local(self.coloring, self.changed_since(mark)) is not None:
            return False
        if self.strict:
            return verify_acyclic(self.graph, self.coloring, self.palette_size).accepted
        return True

    def _net_changes(self) -> List[Recolor]:
        first: Dict[Edge, Optional[int]] = {}
        for edge, old in self._journal:
            first.setdefault(edge, old)
        return [
            Recolor(edge[0], edge[1], before, self.coloring.color(*edge))
            for edge, before in first.items()
            if before != self.coloring.color(*edge)
        ]

    @staticmethod
    def ordered(colors: Iterable[int]) -> List[int]:
        return sorted(set(colors))
