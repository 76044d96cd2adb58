"""Extension at a 4- or 5-vertex v whose lightest neighbors have a small degree sum."""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, List

from models.configuration import ConfigKind
from models.extension import ExtensionContext

from .base import BaseExtender

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Sides:
    """Case 2.2 roles: alpha in T'_2 sits at w3 and not at w4."""

    one: int
    two: int
    w1: int
    w2: int
    w3: int
    w4: int
    alpha: int
    six: int
    seven: int


class A4Extender(BaseExtender):
    """Resolve by k = |C(u) ∩ C(v)|, one case per value of k.

    Shared colors are named by the neighbor w_i of v that carries them.
    A move that lowers k hands the smaller overlap back to the start, so
    each "reduce to Case k - 1" is checked by the overlap actually
    shrinking. Colors of T_i are tried by their multiplicity in S_v.
    """

    kinds = (ConfigKind.A4_1, ConfigKind.A4_2)

    def _extend(self) -> bool:
        return self._resolve()

    def _resolve(self) -> bool:
        shared = self.shared()
        if not shared:
            return self.finish("C(u) and C(v) disjoint")
        if self.no_shared_path("(*4.1) fails: free color without a bichromatic path"):
            return True
        if len(shared) == 1:
            return self._case_one(shared[0])

        ctx = self.context()
        case = len(shared)
        if self._multiplicity_one(ctx, case) or self._isolated(ctx, case):
            return True
        if case == 2:
            return self._case_two(ctx)
        if case == 3:
            return self._case_three(ctx)
        return self._case_four(ctx)

    def _w(self, color: int) -> int:
        return self.nbr(self.v, color)

    def _plain(self, ctx: ExtensionContext) -> List[int]:
        """Neighbors of v (other than u) on unshared colors."""
        return [x for x in ctx.w_neighbors if self.color(self.v, x) not in ctx.shared]

    @staticmethod
    def _by_mult(ctx: ExtensionContext, colors: Iterable[int]) -> List[int]:
        return sorted(colors, key=lambda c: (ctx.s_v.mult(c), c))

    # Case 1 and the claims shared by Cases 2-4

    def _case_one(self, s: int) -> bool:
        u, v = self.u, self.v
        u1, w1 = self.nbr(u, s), self._w(s)
        for x in self.ordered(self.C(v) - {s} - self.C(u1)):
            for y in self.ordered(self.C(u) - {s} - self.C(w1)):
                if self.attempt("Case 1: uu_1 into C(v), vw_1 into C(u), uv takes c(uu_1)", [((u, u1), x), ((v, w1), y)], s):
                    return True
        return False

    def _multiplicity_one(self, ctx: ExtensionContext, case: int) -> bool:
        """A free color seen once in S_v moves onto vw_j for a w_j that lacks it."""
        v = self.v
        for x in self.ordered(ctx.free):
            if ctx.s_v.mult(x) != 1:
                continue
            for j in self.ordered(ctx.shared):
                wj = self._w(j)
                if x in self.C(wj):
                    continue
                if self.reduce(f"Case {case}, mult_S_v(x) = 1: vw_j takes x", [((v, wj), x)], self._resolve):
                    return True
        return False

    def _isolated(self, ctx: ExtensionContext, case: int) -> bool:
        """C(w_i) meets C(v) in nothing that matters: vw_i moves into T_i."""
        v = self.v
        for i in self.ordered(ctx.shared):
            wi = self._w(i)
            others = ctx.colors(v) - (ctx.shared if case == 2 else {i})
            if self.C(wi) & others:
                continue
            for x in self._by_mult(ctx, ctx.t_sets[i]):
                if self.reduce(f"Case {case}, C(w_i) ∩ C(v) = {{i}}: vw_i into T_i", [((v, wi), x)], self._resolve):
                    return True
        return False

    # Case 2

    def _case_two(self, ctx: ExtensionContext) -> bool:
        a, b = self.ordered(ctx.shared)
        if self._two_outside_s_v(ctx, a, b):
            return True
        if self.graph.degree(self.v) == 4:
            return self._case_two_one(ctx, a, b) or self._case_two_one(ctx, b, a)
        return self._case_two_two(ctx, a, b) or self._case_two_two(ctx, b, a)

    def _two_outside_s_v(self, ctx: ExtensionContext, a: int, b: int) -> bool:
        """Two colors of C(u) outside S_v go onto vw_1 and vw_2, which then switch.

        uv takes a color of C_1 ∩ C_2, or else one of C_2 missing at u_1.
        """
        u, v = self.u, self.v
        wa, wb = self._w(a), self._w(b)
        for x1, x2 in permutations(self.ordered(ctx.missing_from_s_v), 2):
            mark = self.mark()
            if not self.apply("Case 2, two colors of C(u) outside S_v: vw_1, vw_2 take them", [((v, wa), x1), ((v, wb), x2)]):
                continue
            paths = self.context().c_paths
            first, second = paths.get(x1, frozenset()), paths.get(x2, frozenset())
            candidates = self.ordered(first & second) + self.ordered(second - self.C(self.nbr(u, x1)))
            if self.apply("Case 2: switch vw_1 and vw_2", [((v, wa), x2), ((v, wb), x1)], check_cycles=False):
                for j in candidates:
                    if self.attempt("Case 2: uv takes a color of C_1 ∩ C_2 or of C_2 missing at u_1", [], j, since=mark):
                        return True
            self.rollback(mark)
        return False

    def _case_two_one(self, ctx: ExtensionContext, one: int, two: int) -> bool:
        """Case 2.1: the color k of C(u) missing from S_v moves onto an edge at v."""
        u, v = self.u, self.v
        w1, w2 = self._w(one), self._w(two)
        plain = self._plain(ctx)
        betas, alphas = self._by_mult(ctx, ctx.t_sets[one]), self._by_mult(ctx, ctx.t_sets[two])
        logger.debug("Case 2.1 at v=%d: ||S_v ∩ C(u)|| = %d", v, ctx.s_v.cardinality_within(ctx.colors(u)))
        for k in self.ordered(ctx.missing_from_s_v - {two}):
            for beta in betas:
                if k == one:
                    for w3 in plain:
                        for alpha in alphas:
                            changes = [((v, w3), one), ((v, w1), beta)]
                            if self.attempt("Case 2.1, k = c(vw_1): vw_3 takes k, vw_1 into T_1, uv into T_2", changes, alpha):
                                return True
                    continue
                if not self.path(u, w2, k, beta):
                    if self.attempt("Case 2.1, no (k, β)-path from u to w_2: vw_2 takes k, uv takes β", [((v, w2), k)], beta):
                        return True
                    continue
                for w3 in plain:
                    for alpha in alphas:
                        changes = [((v, w3), k), ((v, w2), alpha)]
                        if self.attempt("Case 2.1: vw_3 takes k, vw_2 into T_2, uv takes β", changes, beta):
                            return True
        return False

    def _case_two_two(self, ctx: ExtensionContext, one: int, two: int) -> bool:
        """Case 2.2 with alpha in T'_two; the other shared color is ``one``."""
        v = self.v
        plain = self._plain(ctx)
        if len(plain) != 2:
            return False
        for alpha in self._by_mult(ctx, ctx.t_prime[two]):
            holders = [x for x in plain if alpha in self.C(x)]
            if len(holders) != 1:
                continue
            w3 = holders[0]
            w4 = plain[1] if plain[0] == w3 else plain[0]
            sides = _Sides(one, two, self._w(one), self._w(two), w3, w4, alpha, self.color(v, w3), self.color(v, w4))
            if self._case_two_two_at(ctx, sides):
                return True
        return False

    def _case_two_two_at(self, ctx: ExtensionContext, r: _Sides) -> bool:
        v = self.v
        alphas, betas = self._by_mult(ctx, ctx.t_sets[r.two]), self._by_mult(ctx, ctx.t_sets[r.one])

        if not self.path(r.w2, r.w3, r.six, r.alpha):
            if self.reduce("(*4.2) fails: vw_2 takes α", [((v, r.w2), r.alpha)], self._resolve):
                return True
        if self._same_side(ctx, r):
            return True
        if self._outside_s_v(ctx, r, alphas, betas):
            return True
        if self._seven_moves(r, betas):
            return True
        for beta in self._by_mult(ctx, ctx.t_prime[r.one]):
            if beta in self.C(r.w3) and self._case_two_two_one(ctx, r, beta, alphas, betas):
                return True
            if beta in self.C(r.w4) and self._case_two_two_two(ctx, r, beta, alphas):
                return True
        return False

    def _same_side(self, ctx: ExtensionContext, r: _Sides) -> bool:
        """T'_2 stays at w_3 and T'_1 at one of w_3, w_4, each behind its alternating path."""
        v = self.v
        for alpha in self.ordered(ctx.t_prime[r.two] - {r.alpha}):
            if alpha in self.C(r.w4) and alpha not in self.C(r.w3):
                changes = [((v, r.w4), r.alpha), ((v, r.w2), alpha)]
                if self.reduce("Case 2.2, T'_2 on both sides: vw_4 takes α_1, vw_2 takes α_2", changes, self._resolve):
                    return True
            elif alpha in self.C(r.w3) and not self.path(r.w2, r.w3, r.six, alpha):
                if self.reduce("Case 2.2, no (c(vw_3), α_i)-path from w_2 to w_3: vw_2 takes α_i", [((v, r.w2), alpha)], self._resolve):
                    return True

        primes = self.ordered(ctx.t_prime[r.one])
        for wj, wk in ((r.w3, r.w4), (r.w4, r.w3)):
            near = [b for b in primes if b in self.C(wj) and b not in self.C(wk)]
            far = [b for b in primes if b in self.C(wk) and b not in self.C(wj)]
            for beta in near:
                if not self.path(r.w1, wj, self.color(v, wj), beta):
                    if self.reduce("Case 2.2, no (c(vw_j), β)-path from w_1 to w_j: vw_1 takes β", [((v, r.w1), beta)], self._resolve):
                        return True
                for beta2 in far:
                    changes = [((v, wk), beta), ((v, r.w1), beta2)]
                    if self.reduce("Case 2.2, T'_1 on both sides: vw_k takes β_1, vw_1 takes β_2", changes, self._resolve):
                        return True
        return False

    def _outside_s_v(self, ctx: ExtensionContext, r: _Sides, alphas: List[int], betas: List[int]) -> bool:
        """A color of C(u) outside S_v finds a place at v."""
        u, v = self.u, self.v
        missing = ctx.missing_from_s_v
        if r.two in missing:
            for alpha in alphas:
                for beta in betas:
                    changes = [((v, r.w3), r.two), ((v, r.w2), alpha)]
                    if self.attempt("Case 2.2, c(vw_2) outside S_v: vw_3 takes it, vw_2 into T_2, uv into T_1", changes, beta):
                        return True

        for k in self.ordered(missing - ctx.shared):
            for beta in betas:
                if not self.path(u, r.w2, k, beta):
                    if self.attempt("Case 2.2, no (k, β)-path from u_k to w_2: vw_2 takes k, uv takes β", [((v, r.w2), k)], beta):
                        return True
                    continue
                for alpha in alphas:
                    changes = [((v, r.w3), k), ((v, r.w2), alpha)]
                    if self.attempt("Case 2.2, k outside S_v: vw_3 takes k, vw_2 into T_2, uv takes β", changes, beta):
                        return True

        if r.one not in missing:
            return False
        primes = self._by_mult(ctx, ctx.t_prime[r.one])
        for wx, wy in ((r.w3, r.w4), (r.w4, r.w3)):
            if primes:
                for beta1 in (b for b in primes if b in self.C(wx) and b not in self.C(wy)):
                    for beta2 in (b for b in betas if b != beta1):
                        for alpha in alphas:
                            changes = [((v, wy), beta1), ((v, wx), r.one), ((v, r.w1), beta2)]
                            if self.attempt("Case 2.2, c(vw_1) outside S_v: vw_4, vw_3, vw_1 take β_1, c(vw_1), β_2", changes, alpha):
                                return True
                continue
            for beta in betas:
                if self.path(r.w1, wx, self.color(v, wx), beta):
                    continue
                for alpha in alphas:
                    changes = [((v, wy), r.one), ((v, r.w1), beta)]
                    if self.attempt("Case 2.2, c(vw_1) outside S_v and T'_1 empty: vw_4 takes c(vw_1), vw_1 takes β", changes, alpha):
                        return True
        return False

    def _seven_moves(self, r: _Sides, betas: List[int]) -> bool:
        """c(vw_4) becomes free for uv, or moves onto vw_2."""
        u, v = self.u, self.v
        blocked = self.path(self.nbr(u, r.one), r.w1, r.one, r.seven) or self.path(self.nbr(u, r.two), r.w2, r.two, r.seven)
        if not blocked and self.attempt("Case 2.2, no (c(vw_i), c(vw_4))-path from u_i to w_i: vw_4 takes α, uv takes c(vw_4)", [((v, r.w4), r.alpha)], r.seven):
            return True
        if r.seven in self.C(r.w1) and r.seven not in self.C(r.w2) and not self.path(r.w2, r.w3, r.six, r.seven):
            for beta in betas:
                changes = [((v, r.w2), r.seven), ((v, r.w4), r.alpha)]
                if self.attempt("Case 2.2, no (c(vw_3), c(vw_4))-path from w_2 to w_3: vw_2 takes c(vw_4), vw_4 takes α", changes, beta):
                    return True
        return False

    def _case_two_two_one(self, ctx: ExtensionContext, r: _Sides, beta: int, alphas: List[int], betas: List[int]) -> bool:
        """Case 2.2.1: beta sits at w_3."""
        v = self.v
        c1, c2, c3 = self.C(r.w1), self.C(r.w2), self.C(r.w3)
        if r.seven in c1 and r.seven in c2:
            for alpha in alphas:
                changes = [((v, r.w3), r.two), ((v, r.w2), alpha)]
                if self.attempt("Case 2.2.1, c(vw_4) at w_1 and w_2: vw_3 takes c(vw_2), vw_2 into T_2, uv takes β", changes, beta):
                    return True
            return False
        if r.seven in c2:
            if not self.path(r.w1, r.w3, r.six, r.seven):
                for alpha in (a for a in alphas if a != r.alpha):
                    changes = [((v, r.w4), r.alpha), ((v, r.w1), r.seven)]
                    if self.attempt("Case 2.2.1, no (c(vw_3), c(vw_4))-path from w_1 to w_3: vw_4 takes α_1, vw_1 takes c(vw_4)", changes, alpha):
                        return True
                return False
            return self._through_w4(ctx, r, alphas, betas, "Case 2.2.1, c(vw_4) at w_2 and w_3")
        if r.seven in c1 and r.seven in c3:
            return self._through_w4(ctx, r, alphas, betas, "Case 2.2.1, c(vw_4) at w_1 and w_3")
        return False

    def _through_w4(self, ctx: ExtensionContext, r: _Sides, alphas: List[int], betas: List[int], name: str) -> bool:
        """vw_4 takes a free color gamma held by both w_1 and w_2, then w_3 or w_1 gives way."""
        v = self.v
        mult = ctx.s_v.cardinality_within({r.six, r.seven})
        logger.debug("%s: ||S_v ∩ {6, 7}|| = %d, |T_1| = %d, kappa_1 = %d", name, mult, len(ctx.t_sets[r.one]), ctx.kappa[r.one])
        if mult < 4 or ctx.t_zero:
            return False
        gammas = self.ordered((ctx.free & self.C(r.w1) & self.C(r.w2)) - self.C(r.w4))
        for gamma in gammas:
            clear = not self.path(r.w1, r.w4, r.one, gamma)
            for alpha in alphas:
                for beta in betas:
                    if clear:
                        changes, last = [((v, r.w4), gamma), ((v, r.w3), r.two), ((v, r.w2), alpha)], beta
                        label = f"{name}, no (c(vw_1), γ)-path from w_1 to w_4: vw_4, vw_3, vw_2 take γ, c(vw_2), α"
                    else:
                        changes, last = [((v, r.w4), gamma), ((v, r.w1), beta), ((v, r.w3), r.one)], alpha
                        label = f"{name}: vw_4, vw_1, vw_3 take γ, β, c(vw_1)"
                    if self.attempt(label, changes, last):
                        return True
        return False

    def _case_two_two_two(self, ctx: ExtensionContext, r: _Sides, beta: int, alphas: List[int]) -> bool:
        """Case 2.2.2: beta sits at w_4."""
        u, v = self.u, self.v
        if r.six not in self.C(r.w1):
            if not self.path(self.nbr(u, r.two), r.w2, r.two, r.six):
                if self.attempt("Case 2.2.2, no (c(vw_2), c(vw_3))-path from u_2 to w_2: vw_3 takes β, uv takes c(vw_3)", [((v, r.w3), beta)], r.six):
                    return True
            if not self.path(r.w1, r.w4, r.six, r.seven):
                for alpha in alphas:
                    changes = [((v, r.w1), r.six), ((v, r.w3), beta)]
                    if self.attempt("Case 2.2.2, no (c(vw_3), c(vw_4))-path from w_1 to w_4: vw_1 takes c(vw_3), vw_3 takes β", changes, alpha):
                        return True
        if self.cfg["disjunct"] != 2:
            return False
        return self._chord(ctx, r, beta)

    def _chord(self, ctx: ExtensionContext, r: _Sides, beta: int) -> bool:
        """(*4.5): u is adjacent to v_5, the last 7-neighbor of v."""
        u, v = self.u, self.v
        v5 = self.cfg["others"][-1]
        if not self.graph.has_edge(u, v5):
            return False
        c5, cu5 = self.color(v, v5), self.color(u, v5)
        spare = self.ordered(ctx.free - self.C(v5))
        rest = ctx.colors(u) - ctx.shared

        if c5 in ctx.shared and r.seven in self.C(v5):
            (other,) = ctx.shared - {c5}
            w_other = self._w(other)
            if cu5 == other:
                return any(self.attempt("(*4.5), c(uv_5) the other shared color: uv avoids C(v_5)", [], i) for i in spare)
            if cu5 not in rest:
                return False
            if not self.path(v, w_other, c5, cu5):
                for i in spare:
                    if self.attempt("(*4.5), no (c(vv_5), c(uv_5))-path from v to w_2: vw_2 takes c(uv_5)", [((v, w_other), cu5)], i):
                        return True
            for i in spare:
                if all(not self.path(u, v5, i, j) for j in rest - {cu5}):
                    if self.attempt("(*4.5): uv_5 takes a free color, uv takes the old c(uv_5)", [((u, v5), i)], cu5):
                        return True
            for j in self.ordered((rest - {cu5}) & self.C(v5)):
                if self.path(u, v5, beta, j):
                    changes = [((v, v5), beta), ((v, w_other), j), ((v, r.w4), c5)]
                    if self.attempt_any("(*4.5): vv_5, vw_2, vw_4 take β, j, c(vv_5)", changes):
                        return True
            return False

        if c5 != r.six or beta in self.C(v5):
            return False
        if cu5 in rest:
            return self.attempt("(*4.5), c(vv_5) = c(vw_3): vw_2 takes c(uv_5), uv takes β", [((v, r.w2), cu5)], beta)
        for i in spare:
            if all(not self.path(u, v5, i, j) for j in rest):
                if self.reduce("(*4.5): uv_5 takes a free color", [((u, v5), i)], self._resolve):
                    return True
        for j in self.ordered(rest & self.C(v5)):
            if not self.path(u, v5, beta, j):
                continue
            blocked = self.path(v5, r.w1, j, r.six)
            if cu5 == r.one:
                if not blocked:
                    changes, last = [((v, r.w1), j), ((v, r.w2), r.one)], beta
                else:
                    changes, last = [((v, r.w2), j), ((v, v5), beta)], r.six
            elif not blocked:
                changes, last = [((v, r.w1), j)], beta
            else:
                changes, last = [((v, r.w1), j), ((v, v5), beta)], r.six
            if self.attempt(f"(*4.5), c(uv_5) shared: {'vv_5 takes β' if blocked else 'vw_1 takes j'}", changes, last):
                return True
        return False

    # Cases 3 and 4

    def _case_three(self, ctx: ExtensionContext) -> bool:
        if self.graph.degree(self.v) == 4:
            return self._case_three_one(ctx, shift=True)
        return self._case_three_two(ctx)

    def _case_three_one(self, ctx: ExtensionContext, shift: bool) -> bool:
        """Case 3.1: a shared color outside S_v moves to the third shared edge."""
        v = self.v
        shared = self.ordered(ctx.shared)
        for i in shared:
            if i in ctx.s_v:
                continue
            wi = self._w(i)
            for j, l in permutations([x for x in shared if x != i], 2):
                wj, wl = self._w(j), self._w(l)
                for beta in self._by_mult(ctx, ctx.t_sets[i]):
                    if not self.path(wi, wj, j, beta):
                        changes = [((v, wl), i), ((v, wi), beta)]
                        label = "Case 3.1, no (c(vw_2), β)-path from w_1 to w_2: vw_3 takes c(vw_1), vw_1 into T_1"
                    else:
                        changes = [((v, wi), beta), ((v, wj), i)]
                        label = "Case 3.1: vw_1 into T_1, vw_2 takes c(vw_1)"
                    if self.reduce(label, changes, self._resolve):
                        return True
        if not shift:
            return False
        for k in self.ordered(ctx.missing_from_s_v - ctx.shared):
            for i in shared:
                mark = self.mark()
                if self.apply("Case 3.1: vw_1 takes a color of C(u) outside S_v", [((v, self._w(i)), k)]):
                    if self._case_three_one(self.context(), shift=False):
                        return True
                self.rollback(mark)
        return False

    def _case_three_two(self, ctx: ExtensionContext) -> bool:
        """Case 3.2: beta in T'_1 missing at w_3 sits at w_4."""
        v = self.v
        plain = self._plain(ctx)
        if len(plain) != 1:
            return False
        w4 = plain[0]
        six = self.color(v, w4)
        for i in self.ordered(ctx.shared):
            wi = self._w(i)
            for beta in self._by_mult(ctx, ctx.t_prime[i]):
                if beta not in self.C(w4):
                    continue
                for j in self.ordered(ctx.shared - {i}):
                    wj = self._w(j)
                    if beta in self.C(wj):
                        continue
                    if not self.path(wi, w4, beta, six):
                        changes, label = [((v, wi), beta)], "Case 3.2, no (β, c(vw_4))-path from w_1 to w_4: vw_1 takes β"
                    else:
                        changes, label = [((v, wj), beta)], "Case 3.2: vw_3 takes β"
                    if self.reduce(label, changes, self._resolve):
                        return True
        return False

    def _case_four(self, ctx: ExtensionContext) -> bool:
        """Case 4: beta in T'_1 at two of w_2..w_4; the holder with a path to v decides."""
        v = self.v
        shared = self.ordered(ctx.shared)
        if len(ctx.t_zero) > 1:
            logger.debug("Case 4 at v=%d: |T_0| = %d", v, len(ctx.t_zero))
        for i in shared:
            wi = self._w(i)
            for beta in self._by_mult(ctx, ctx.t_prime[i]):
                holders = [j for j in shared if j != i and beta in self.C(self._w(j))]
                lacking = [j for j in shared if j != i and j not in holders]
                if len(holders) != 2 or len(lacking) != 1:
                    continue
                for a in holders:
                    if beta not in ctx.c_paths[a]:
                        continue
                    (b,) = [x for x in holders if x != a]
                    if not self.path(wi, self._w(b), b, beta):
                        changes, label = [((v, wi), beta)], "Case 4, no (c(vw_3), β)-path from w_1 to w_3: vw_1 takes β"
                    else:
                        changes, label = [((v, self._w(lacking[0])), beta)], "Case 4: vw_4 takes β"
                    if self.reduce(label, changes, self._resolve):
                        return True
        return False
