"""Extension at a vertex u with a 2-neighbor v and mostly low-degree neighbors."""

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from models.configuration import ConfigKind

from .base import BaseExtender, Change, Mark

logger = logging.getLogger(__name__)

HIGH_DEGREE = 9


class A2Extender(BaseExtender):
    """Moves for A2.1 and A2.2, in the order of their guards.

    With c(vw) in C(u), uv first looks for a color outside C(u) that no
    (c(vw), a)-path from u to w blocks, then for one that avoids the
    neighbor carrying c(vw) when that neighbor has degree at most 8. Once
    (*2.1) holds, A2.1 is exhausted. A2.2 goes on through the high colors
    (edges from u to its neighbors of degree 9 or more), the one neighbor
    u_9 of degree 3..8 and the 2-neighbors.
    """

    kinds = (ConfigKind.A2_1, ConfigKind.A2_2)

    def _extend(self) -> bool:
        u, v, w = self.u, self.v, self.cfg["w"]
        if self.color(v, w) not in self.C(u):
            return self.finish("c(vw) outside C(u)")
        if self._settle():
            return True

        low = self.context(w).s_minus(8)
        for x in self.ordered(low - self.C(w)):
            mark = self.mark()
            if self.apply("(*2.1) fails: vw takes a color of S_8- missing at w", [((v, w), x)]) and self._settle():
                return True
            self.rollback(mark)

        if self.cfg.kind is ConfigKind.A2_1:
            logger.debug("%s: (*2.1) holds, so d(w) would exceed the maximum degree", self.cfg.summary)
            return False
        return self._second_family()

    def _outside(self) -> List[int]:
        """C minus C(u); with C(v) = {c(vw)} inside C(u) these are the free colors."""
        return self.missing_at(self.u)

    def _settle(self) -> bool:
        u, w = self.u, self.cfg["w"]
        first = self.color(self.v, w)
        for a in self._outside():
            if not self.path(u, w, first, a) and self.attempt("no (c(vw), a)-path from u to w", [], a):
                return True
        if first not in self.context(w).s_minus(8):
            return False
        ui = self.nbr(u, first)
        for a in self.ordered(set(self._outside()) - self.C(ui)):
            if self.attempt("c(vw) in S_8-: uv avoids C(u_i)", [], a):
                return True
        return False

    # A2.2

    def _second_family(self) -> bool:
        u = self.u
        neighbors: Sequence[int] = self.cfg["neighbors"]
        far: Dict[int, int] = self.cfg["far"]
        high = {self.color(u, x): x for x in neighbors if self.graph.degree(x) >= HIGH_DEGREE}
        middle = [x for x in neighbors if 3 <= self.graph.degree(x) < HIGH_DEGREE]
        twos = [x for x in neighbors if x in far]
        u9 = middle[0] if middle else (twos[0] if twos else None)

        if self._borrow_high(high):
            return True
        if u9 is not None and self._free_u9(high, u9, twos):
            return True
        if self._free_two_neighbor(high, u9, twos):
            return True
        if u9 is None:
            return False
        return self._switch_pair(high, u9, twos)

    def _vw_change(self, i: int) -> List[Change]:
        """vw takes i unless it already has it."""
        v, w = self.v, self.cfg["w"]
        return [] if self.color(v, w) == i else [((v, w), i)]

    def _borrow_high(self, high: Dict[int, int]) -> bool:
        """Escape (*2.2): no (i, j)-path from u_i to w lets vw take i and uv take j."""
        w = self.cfg["w"]
        first = self.color(self.v, w)
        for i, ui in sorted(high.items()):
            if i == first or i in self.C(w):
                continue
            for j in self._outside():
                if not self.path(ui, w, i, j) and self.attempt("(*2.2) fails: vw takes c(uu_i), uv takes j", [((self.v, w), i)], j):
                    return True
        return False

    def _free_u9(self, high: Dict[int, int], u9: int, twos: List[int]) -> bool:
        """Escape (*2.3): no (i, 9)-path from u_i to w; uu_9 moves off and uv takes its color."""
        u, w = self.u, self.cfg["w"]
        nine = self.color(u, u9)
        others = self.C(u9) - {nine}
        forbidden = set(self.C(u)) | self.C(u9)
        for x in twos:
            if self.color(u, x) in others:
                forbidden |= self.C(x)
        candidates = self.ordered(set(self.palette) - forbidden)
        for i, ui in sorted(high.items()):
            if self.path(ui, w, i, nine):
                continue
            for r in candidates:
                if self.attempt("(*2.3) fails: recolor uu_9, vw takes c(uu_i), uv takes c(uu_9)", [((u, u9), r)] + self._vw_change(i), nine):
                    return True
        return False

    def _free_two_neighbor(self, high: Dict[int, int], u9: Optional[int], twos: List[int]) -> bool:
        """Escape (*2.4): no (i, j)-path from u_i to w for the color j of a 2-neighbor."""
        u, w, far = self.u, self.cfg["w"], self.cfg["far"]
        s2 = {self.color(u, x) for x in twos}
        blocking = s2 | ({self.color(u, u9)} if u9 is not None else set())
        for uj in twos:
            j = self.color(u, uj)
            a = self.color(uj, far[uj])
            forbidden = set(self.C(u)) | self.C(uj)
            if a in blocking:
                label = "(*2.4) fails: recolor uu_j away from C(u_k), vw takes c(uu_i), uv takes c(uu_j)"
                forbidden |= self.C(self.nbr(u, a))
            else:
                label = "(*2.4) fails: recolor uu_j, vw takes c(uu_i), uv takes c(uu_j)"
            candidates = self.ordered(set(self.palette) - forbidden)
            for i, ui in sorted(high.items()):
                if self.path(ui, w, i, j):
                    continue
                for r in candidates:
                    if self.attempt(label, [((u, uj), r)] + self._vw_change(i), j):
                        return True
        return False

    def _claim_pair(self, high: Dict[int, int], u9: int) -> Optional[Tuple[int, int]]:
        """High colors i0, j0 with no (i0, 9)-path from u_j0 to u_9 and no (j0, 9)-path from u_i0 to u_9.

        Start from a high color h missing at u_9 and pair it with the next
        two high colors in turn; if both are joined to u_9 from u_h, those
        two form the pair.
        """
        nine = self.color(self.u, u9)

        def clear(p: int, q: int) -> bool:
            return not self.path(high[q], u9, p, nine) and not self.path(high[p], u9, q, nine)

        missing = [h for h in sorted(high) if h not in self.C(u9)]
        if not missing:
            return None
        h = missing[0]
        rest = [x for x in sorted(high) if x != h]
        for x in rest[:2]:
            if clear(h, x):
                return h, x
        if len(rest) >= 2 and clear(rest[0], rest[1]):
            return rest[0], rest[1]
        return None

    def _switch_pair(self, high: Dict[int, int], u9: int, twos: List[int]) -> bool:
        """Switch uu_i0 and uu_j0, then break the cycles left through 2-neighbors."""
        u = self.u
        pair = self._claim_pair(high, u9)
        if pair is None:
            logger.debug("%s: no switchable pair of high colors", self.cfg.summary)
            return False
        p, q = pair
        up, uq = high[p], high[q]
        mark = self.mark()
        if not self.apply("(*2.5) switch uu_i0 and uu_j0 of the claim pair", [((u, up), q), ((u, uq), p)], check_cycles=False):
            return False
        if self.finish("(*2.5) switch uu_i0 and uu_j0 of the claim pair", since=mark):
            return True

        # T_1 closes through the p-edge at u (now to u_j0), T_2 through the q-edge
        t1 = self._cycles_through(p, twos)
        t2 = self._cycles_through(q, twos)
        t1 = self._pair_off(t1, "T_1")
        t2 = self._pair_off(t2, "T_2")
        if self._repair([(x, q) for x in t1] + [(x, p) for x in t2], set(twos) | {u9}, mark):
            return True
        self.rollback(mark)
        return False

    def _cycles_through(self, color: int, twos: List[int]) -> List[int]:
        """2-neighbors u_t whose far edge has ``color`` and whose edge to u lies on a (color, c(uu_t))-cycle."""
        u, far = self.u, self.cfg["far"]
        return [x for x in twos if self.color(x, far[x]) == color and self.closes(u, self.color(u, x), color)]

    def _pair_off(self, members: List[int], name: str) -> List[int]:
        """Switch the colors of uu_t for members taken two at a time; return the one left over."""
        u = self.u
        for a, b in zip(members[0::2], members[1::2]):
            ca, cb = self.color(u, a), self.color(u, b)
            self.apply(f"switch two edges of {name}", [((u, a), cb), ((u, b), ca)], check_cycles=False)
        return members[-1:] if len(members) % 2 else []

    def _repair(self, pending: List[Tuple[int, int]], blockers: Set[int], mark: Mark) -> bool:
        """Recolor the far edge u_t x_t of each leftover u_t, avoiding the color given with it.

        When the new color already sits on uu_k for a 2-neighbor or u_9,
        uu_t moves to a color outside C(u) and C(u_k).
        """
        if not pending:
            return self.finish("(*2.5) T_1 and T_2 broken, uv outside C(u)", since=mark)
        u = self.u
        (ut, avoid), rest = pending[0], pending[1:]
        xt = self.cfg["far"][ut]
        for r in self.ordered(set(self.palette) - self.C(xt) - {avoid}):
            inner = self.mark()
            if not self.apply("(*2.5) recolor the far edge u_t x_t", [((ut, xt), r)], check_cycles=False):
                continue
            holder = self.nbr(u, r)
            if holder not in blockers:
                if self._repair(rest, blockers, mark):
                    return True
            else:
                for j in self.ordered(set(self._outside()) - self.C(holder)):
                    step = self.mark()
                    if self.apply("(*2.5) recolor uu_t outside C(u) and C(u_k)", [((u, ut), j)], check_cycles=False) and self._repair(rest, blockers, mark):
                        return True
                    self.rollback(step)
            self.rollback(inner)
        return False
