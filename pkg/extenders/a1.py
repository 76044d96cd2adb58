"""Extension across a 2-vertex v = uw with d(u) <= 9."""

from models.configuration import ConfigKind

from .base import BaseExtender


class A1Extender(BaseExtender):
    kinds = (ConfigKind.A1,)

    def _extend(self) -> bool:
        u, v, w = self.u, self.v, self.cfg["w"]
        first = self.color(v, w)
        if first not in self.C(u):
            return self.finish("c(vw) outside C(u)")

        u1 = self.nbr(u, first)
        for a in self.free():
            if not self.path(w, u1, first, a) and self.attempt("no (c(vw), a)-path from w to u1", [], a):
                return True

        for second in self.ordered(self.C(u) - {first}):
            mark = self.mark()
            if not self.apply("recolor vw into C(u)", [((v, w), second)]):
                continue
            if self.finish("recolor vw into C(u)", since=mark):
                return True
            u2 = self.nbr(u, second)
            switch = [((u, u1), second), ((u, u2), first)]
            for a in self.free():
                if self.attempt("recolor vw, switch uu1 and uu2", switch, a, since=mark):
                    return True
            self.rollback(mark)
        return False
