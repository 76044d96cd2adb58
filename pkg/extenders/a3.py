"""Extension at a 3-vertex u joined to a vertex v of degree at most 10."""

from itertools import permutations
from typing import Callable, List, Tuple

from models.configuration import ConfigKind

from .base import BaseExtender

LOW_DEGREE = 5


class A3Extender(BaseExtender):
    """Resolve by the number of colors C(u) and C(v) share.

    With no shared color blocking, uv takes a free color. One shared
    color (Case I) is traded between the two ends according to the
    subfamily; two shared colors (Case II) are reduced to one by moving an
    edge at u onto a free color, and otherwise, with (*3.2) in force, the
    low-degree neighbors of v lend their colors to both edges at u.
    """

    kinds = (ConfigKind.A3_1, ConfigKind.A3_2, ConfigKind.A3_3)

    def _extend(self) -> bool:
        shared = self.shared()
        if not shared:
            return self.finish("C(u) and C(v) disjoint")
        if len(shared) == 1:
            return self._case_one()
        return self._case_two()

    def _ends(self) -> Tuple[int, int, int, int]:
        """(s, u_s, o, u_o): the shared color and its edge at u, then the other edge."""
        u = self.u
        (s,) = self.shared()
        us = self.nbr(u, s)
        uo = self.cfg["u2"] if us == self.cfg["u1"] else self.cfg["u1"]
        return s, us, self.color(u, uo), uo

    # Case I

    def _case_one(self) -> bool:
        if self.no_shared_path("(*3.1) fails: free color without a bichromatic path"):
            return True
        s, us, o, uo = self._ends()
        kind = self.cfg.kind
        if kind is ConfigKind.A3_1:
            return self._trade(s, us, o)
        if kind is ConfigKind.A3_2:
            if us == self.cfg["u1"]:
                return self._common_other(s, us, o, uo, ("(3.2.1)", "(3.2.1)"), self._second_move_a32)
            return self._common_shared(s, us, o, uo)
        return self._common_other(s, us, o, uo, ("(3.3.1)", "(3.3.2)"), self._second_move_a33)

    def _trade(self, s: int, us: int, o: int) -> bool:
        """A3.1: uu_1 takes a color of C(v), vv_1 takes c(uu_2), uv takes the shared color."""
        u, v = self.u, self.v
        vs = self.nbr(v, s)
        for x in self.ordered(self.C(v) - {s} - self.C(us)):
            if self.attempt("A3.1: uu_1 into C(v), vv_1 takes c(uu_2), uv takes c(uu_1)", [((u, us), x), ((v, vs), o)], s):
                return True
        return False

    def _common_other(
        self, s: int, us: int, o: int, uo: int, names: Tuple[str, str], second: Callable[..., bool]
    ) -> bool:
        """(3.2.1) and (3.3.x): u_2 is adjacent to v and C(v) lacks c(uu_2)."""
        u, v = self.u, self.v
        on_common = self.color(v, uo)
        first, name = names
        if on_common == s:
            return self._shared_on_common(s, us, o, uo, first)

        mark = self.mark()
        if on_common not in self.C(us) and self.apply(f"{name}: uu_1 takes c(vu_2)", [((u, us), on_common)]):
            if self._shared_on_common(on_common, us, o, uo, name):
                return True
            self.rollback(mark)
        return second(s, us, o, uo, on_common)

    def _shared_on_common(self, s: int, us: int, o: int, uo: int, name: str) -> bool:
        """c(vu_2) is the shared color: uu_2 takes a color of C(v) missing at u_1, uv takes c(uu_2)."""
        u, v = self.u, self.v
        on_shared = self.color(v, us)
        label = f"{name}: c(vu_2) shared, uu_2 into C(v), uv takes c(uu_2)"
        for x in self.ordered(self.C(v) - {s, on_shared} - self.C(us) - self.C(uo)):
            if self.attempt(label, [((u, uo), x)], o):
                return True
        return False

    def _second_move_a32(self, s: int, us: int, o: int, uo: int, on_common: int) -> bool:
        u = self.u
        for x in self.ordered(set(self.free()) - self.C(uo)):
            if self.attempt("(3.2.1): uu_2 takes a free color, uv takes c(uu_2)", [((u, uo), x)], o):
                return True
        for x in self.ordered(self.C(self.v) - {s, on_common} - self.C(us)):
            if self.attempt("(3.2.1): uu_2 takes c(uu_1), uu_1 into C(v), uv takes c(uu_2)", [((u, uo), s), ((u, us), x)], o):
                return True
        return False

    def _second_move_a33(self, s: int, us: int, o: int, uo: int, on_common: int) -> bool:
        u = self.u
        for x in self.ordered(set(self.free()) - self.C(uo)):
            if self.attempt("(3.3.2): uu_2 takes a free color, uv takes c(uu_2)", [((u, uo), x)], o):
                return True
        on_shared = self.color(self.v, us)
        for x in self.ordered(self.C(self.v) - {s, on_common, on_shared} - self.C(uo)):
            if self.attempt("(3.3.2): uu_2 into C(v), uv takes c(uu_2)", [((u, uo), x)], o):
                return True
        return False

    def _common_shared(self, s: int, us: int, o: int, uo: int) -> bool:
        """(3.2.2): the shared color is on uu_2; uu_1 moves and uv takes its color."""
        u, v = self.u, self.v
        on_common = self.color(v, us)
        for x in self.ordered(set(self.palette) - self.C(uo) - {s, on_common}):
            if self.attempt("(3.2.2): recolor uu_1, uv takes c(uu_1)", [((u, uo), x)], o):
                return True
        return False

    # Case II

    def _case_two(self) -> bool:
        if self.no_shared_path("(*3.1) fails: free color without a bichromatic path"):
            return True
        u, v = self.u, self.v
        for ui in (self.cfg["u1"], self.cfg["u2"]):
            for x in self.missing_at(u, v, ui):
                if self.reduce("(*3.2) fails: uu_i takes a free color", [((u, ui), x)], self._case_one):
                    return True
        if self.cfg.kind is not ConfigKind.A3_3:
            return False
        return self._lend_low_colors() or self._shift_to_low()

    def _low_colors(self) -> List[int]:
        v = self.v
        return [
            self.color(v, x)
            for x in sorted(self.graph.neighbors(v))
            if x != self.u and self.graph.degree(x) <= LOW_DEGREE and self.color(v, x) is not None
        ]

    def _lend_low_colors(self) -> bool:
        """(*3.2), c(vu_1) unshared: uu_1 and uu_2 take colors of two low neighbors of v, switched."""
        u, u1, u2 = self.u, self.cfg["u1"], self.cfg["u2"]
        if any(self.color(self.v, x) in self.C(u) for x in (u1, u2)):
            return False
        for j, k in permutations(self._low_colors(), 2):
            if self.attempt_any("(*3.2) holds: uu_1, uu_2 take the colors of two low neighbors of v", [((u, u1), k), ((u, u2), j)]):
                return True
        return False

    def _shift_to_low(self) -> bool:
        """(*3.2), c(vu_1) = c(uu_2): uu_2 takes an unshared color of C(v) first."""
        u, v = self.u, self.v
        for ua, ub in ((self.cfg["u1"], self.cfg["u2"]), (self.cfg["u2"], self.cfg["u1"])):
            if self.color(v, ua) != self.color(u, ub):
                continue
            for x in self.ordered(self.C(v) - self.C(u) - self.C(ub) - {self.color(v, ub)}):
                mark = self.mark()
                if self.apply("(*3.2) holds: uu_2 takes an unshared color of C(v)", [((u, ub), x)]) and self._lend_low_colors():
                    return True
                self.rollback(mark)
        return False
