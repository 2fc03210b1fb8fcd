"""The constants c_nu as values of a dicut covering game.

Any weighted DAG whose longest path has nu vertices contracts, level by level,
onto a weighting of the complete transitive DAG on nu vertices without
increasing its max dicut, and every weighting of that DAG is itself such an
instance (zero-weight arcs keep the path order at nu). So c_nu is the value of
the game where the adversary picks arc weights summing to 1 and we pick a
dicut:

    c_nu = max_p min_arc P_p(arc is cut) = min_t max_cut t(cut).

We solve ``max sum(t) s.t. t(C) <= 1 for every dicut C, t >= 0`` with an exact
simplex; the optimum z gives c_nu = 1/z, the adversary t/z, and the dual
prices on the cut rows give the optimal cut distribution. Only
inclusion-maximal dicuts need rows: a dominated cut's constraint is implied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .exactmath import power_upper, sqrt_lower
from .graph_core import Dicut, DicutError

MIN_NU = 2
MAX_NU = 12
# below this the bound check solves the game itself when no solution is given
CHEAP_NU = 9


class GameRangeError(DicutError, ValueError):
    pass


class MalformedFamilyError(DicutError, ValueError):
    pass


def transitive_arcs(nu: int) -> list[tuple[int, int]]:
    return list(combinations(range(nu), 2))


def cut_arc_mask(nu: int, x_mask: int, arcs: Sequence[tuple[int, int]]) -> int:
    m = 0
    for k, (i, j) in enumerate(arcs):
        if (x_mask >> i) & 1 and not (x_mask >> j) & 1:
            m |= 1 << k
    return m


def maximal_cuts(nu: int) -> list[tuple[int, int]]:
    """(X bitmask, arc bitmask) for each inclusion-maximal dicut of the
    complete transitive DAG, largest first; the smallest X mask represents
    duplicates. Row order steers Bland pivoting and was picked for speed."""
    arcs = transitive_arcs(nu)
    first: dict[int, int] = {}
    for x in range(1, (1 << nu) - 1):
        first.setdefault(cut_arc_mask(nu, x, arcs), x)
    by_size = sorted(first, key=lambda m: (-m.bit_count(), first[m]))
    kept: list[int] = []
    for m in by_size:
        if not any(m | k == k for k in kept):
            kept.append(m)
    return [(first[m], m) for m in kept]


class _Tableau:
    """Compact dense tableau for ``max c.x s.t. A x <= b, x >= 0`` with b >= 0.

    Columns index the nonbasic variables; variable ids < n are structural,
    ids >= n are the slacks of the rows. Pivoting follows Bland's rule.
    """

    def __init__(self, a: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
        self.m, self.n = len(a), len(c)
        self.t = [row[:] for row in a]
        self.b = b[:]
        self.c = c[:]
        self.z = Fraction(0)
        self.nonbasic = list(range(self.n))
        self.basic = [self.n + r for r in range(self.m)]
        self.pivots = 0

    def solve(self) -> None:
        while True:
            entering = [j for j in range(self.n) if self.c[j] > 0]
            if not entering:
                return
            s = min(entering, key=lambda j: self.nonbasic[j])
            best = None
            for r in range(self.m):
                a = self.t[r][s]
                if a > 0:
                    key = (self.b[r] / a, self.basic[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                raise ArithmeticError("unbounded program")
            self._pivot(best[1], s)

    def _pivot(self, r: int, s: int) -> None:
        p = self.t[r][s]
        row = [v / p for v in self.t[r]]
        row[s] = 1 / p
        br = self.b[r] / p
        nz = [j for j in range(self.n) if row[j]]
        for i in range(self.m):
            if i == r:
                continue
            f = self.t[i][s]
            if f:
                ti = self.t[i]
                for j in nz:
                    ti[j] -= f * row[j]
                ti[s] = -f / p
                self.b[i] -= f * br
        f = self.c[s]
        for j in nz:
            self.c[j] -= f * row[j]
        self.c[s] = -f / p
        self.z += f * br
        self.t[r], self.b[r] = row, br
        self.basic[r], self.nonbasic[s] = self.nonbasic[s], self.basic[r]
        self.pivots += 1

    def primal(self) -> list[Fraction]:
        x = [Fraction(0)] * self.n
        for r, v in enumerate(self.basic):
            if v < self.n:
                x[v] = self.b[r]
        return x

    def dual(self) -> list[Fraction]:
        y = [Fraction(0)] * self.m
        for j, v in enumerate(self.nonbasic):
            if v >= self.n:
                y[v - self.n] = -self.c[j]
        return y


@dataclass(frozen=True)
class GameSolution:
    nu: int
    value: Fraction
    cut_distribution: tuple[tuple[Dicut, Fraction], ...]
    adversary_weights: dict[tuple[int, int], Fraction]
    primal_value: Fraction
    dual_value: Fraction
    pivots: int = 0

    def coverage(self) -> dict[tuple[int, int], Fraction]:
        """Probability that each arc is cut under the cut distribution."""
        out = {}
        for i, j in transitive_arcs(self.nu):
            out[(i, j)] = sum((p for cut, p in self.cut_distribution
                               if i in cut.x_side and j not in cut.x_side), Fraction(0))
        return out

    def best_response_value(self) -> Fraction:
        """Heaviest dicut, over all 2^nu subsets, under the adversary weights."""
        arcs = transitive_arcs(self.nu)
        weights = [self.adversary_weights[a] for a in arcs]
        best = Fraction(0)
        for x in range(1 << self.nu):
            v = sum((w for (i, j), w in zip(arcs, weights) if (x >> i) & 1 and not (x >> j) & 1), Fraction(0))
            best = max(best, v)
        return best

    def check(self) -> None:
        """Raise AssertionError unless both strategies certify ``value``."""
        probs = [p for _, p in self.cut_distribution]
        assert all(p >= 0 for p in probs) and sum(probs) == 1, "cut distribution is not a distribution"
        weights = list(self.adversary_weights.values())
        assert all(w >= 0 for w in weights) and sum(weights) == 1, "adversary weights are not normalized"
        assert self.primal_value == self.dual_value, "primal and dual optima differ"
        assert self.value * self.primal_value == 1
        assert min(self.coverage().values()) >= self.value, "some arc is covered below the value"
        assert self.best_response_value() <= self.value, "adversary weighting admits a heavier dicut"


def solve_game(nu: int) -> GameSolution:
    if not MIN_NU <= nu <= MAX_NU:
        raise GameRangeError(f"nu must lie in [{MIN_NU}, {MAX_NU}], got {nu}")
    arcs = transitive_arcs(nu)
    cuts = maximal_cuts(nu)
    a = [[Fraction((cm >> k) & 1) for k in range(len(arcs))] for _, cm in cuts]
    lp = _Tableau(a, [Fraction(1)] * len(cuts), [Fraction(1)] * len(arcs))
    lp.solve()
    t, y = lp.primal(), lp.dual()
    z = lp.z
    primal, dual = sum(t, Fraction(0)), sum(y, Fraction(0))
    dist = tuple((Dicut.from_mask(x), yr / dual) for (x, _), yr in zip(cuts, y) if yr)
    adversary = {arc: ta / primal for arc, ta in zip(arcs, t)}
    sol = GameSolution(nu, 1 / z, dist, adversary, primal, dual, lp.pivots)
    sol.check()
    return sol


@lru_cache(maxsize=None)
def cnu(nu: int) -> GameSolution:
    """Exact c_nu with both optimal strategies, for 2 <= nu <= 12."""
    return solve_game(nu)


# -- explicit cover families -------------------------------------------------

def _family(*xs: Sequence[int]) -> tuple[Dicut, ...]:
    # vertex s_i is id i-1
    return tuple(Dicut(frozenset(v - 1 for v in x)) for x in xs)


COVER_FAMILIES: dict[int, tuple[tuple[Dicut, ...], int]] = {
    3: (_family((1, 2), (1,)), 1),
    4: (_family((1, 2), (1, 3)), 1),
    5: (_family((1, 2, 3), (1, 2), (1, 3, 4), (1, 3), (1, 2, 4)), 2),
    6: (_family((1, 2, 5), (1, 3, 4), (1, 2, 3), (1, 3, 5), (1, 2, 4)), 2),
    7: (_family((1, 2, 3, 5), (1, 2, 3, 6), (1, 2, 4, 5), (1, 2, 4), (1, 2, 6),
                (1, 3, 4, 6), (1, 3, 4), (1, 3, 5)), 3),
    8: (_family((1, 2, 3, 5), (1, 2, 3, 6), (1, 2, 3, 7), (1, 2, 4, 5), (1, 2, 4, 6),
                (1, 2, 4, 7), (1, 2, 5, 6), (1, 3, 4, 5), (1, 3, 4, 6), (1, 3, 4, 7),
                (1, 3, 5, 7)), 4),
}


def cover_family(nu: int) -> tuple[tuple[Dicut, ...], int]:
    """Built-in (family, t) proving c_nu >= t / len(family)."""
    if nu not in COVER_FAMILIES:
        raise KeyError(f"no built-in cover family for nu = {nu}")
    return COVER_FAMILIES[nu]


def family_coverage(nu: int, family: Sequence[Dicut]) -> dict[tuple[int, int], int]:
    return {(i, j): sum(1 for c in family if i in c.x_side and j not in c.x_side)
            for i, j in transitive_arcs(nu)}


def verify_cover_family(nu: int, family: Sequence[Dicut], t: int, total: int) -> bool:
    """True iff each of the ``total`` dicuts in ``family`` lives on nu vertices
    and every arc i<j is cut by at least ``t`` of them."""
    if nu < MIN_NU:
        raise MalformedFamilyError(f"nu must be >= {MIN_NU}, got {nu}")
    if len(family) != total:
        raise MalformedFamilyError(f"family has {len(family)} dicuts, expected {total}")
    for c in family:
        bad = [v for v in c.x_side if not 0 <= v < nu]
        if bad:
            raise MalformedFamilyError(f"dicut mentions vertices {sorted(bad)} outside [0, {nu})")
    return min(family_coverage(nu, family).values()) >= t


# -- general bounds ----------------------------------------------------------

def cnu_lower_bound(nu: int) -> Fraction:
    """Rational lower bound on c_nu.

    The level-colouring bound 1/4 + 1/(4 nu) holds for every nu; for nu >= 36
    the block bound 1/4 + 1/(8 (3 nu)^(2/3)) may be larger, taken with a
    rational upper bracket of (3 nu)^(2/3).
    """
    if nu < MIN_NU:
        raise GameRangeError(f"nu must be >= {MIN_NU}, got {nu}")
    lower = Fraction(1, 4) + Fraction(1, 4 * nu)
    if nu >= 36:
        lower = max(lower, Fraction(1, 4) + 1 / (8 * power_upper(3 * nu, 2, 3)))
    return lower


def cnu_upper_bound(nu: int) -> Optional[Fraction]:
    """1/4 + 1/(3 sqrt(nu) - 10) rounded up, for nu >= 12; None below."""
    if nu < 12:
        return None
    return Fraction(1, 4) + 1 / (3 * sqrt_lower(nu) - 10)


def cnu_bounds_check(nu: int, solution: Optional[GameSolution] = None) -> tuple[Fraction, Optional[Fraction]]:
    """(lower, upper) bounds on c_nu; checks them against the exact value when
    one is supplied or cheap to compute."""
    lower, upper = cnu_lower_bound(nu), cnu_upper_bound(nu)
    if solution is None and MIN_NU <= nu <= CHEAP_NU:
        solution = cnu(nu)
    if solution is not None:
        if solution.nu != nu:
            raise ValueError(f"solution is for nu = {solution.nu}, not {nu}")
        assert lower <= solution.value, f"lower bound {lower} exceeds c_{nu} = {solution.value}"
        assert upper is None or solution.value <= upper, f"c_{nu} = {solution.value} exceeds upper bound {upper}"
    return lower, upper
