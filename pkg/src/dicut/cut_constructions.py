"""Certified dicut constructions.

Each constructor returns ``(Dicut, BoundCertificate)``. The randomized ones
describe their random cut as an :class:`AssignmentScheme` and round it with
the method of conditional expectations, so the returned cut weighs at least
the exact expectation, which in turn is at least the certified guarantee.
Every certificate is checked before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable, Mapping, Optional, Sequence

from .exactmath import at_least_power, pow_three_fifths_lower
from .graph_core import BoundCertificate, Dicut, DicutError, WeightedDigraph, dicut_weight
from .measures import (
    CyclicGraphError,
    ONE_THIRD,
    check_coloring,
    condensation,
    contract_levels,
    exact_coloring,
    greedy_coloring,
    imbalances,
    l_of_theta,
    level_indices,
    longest_path,
    path_coloring,
    ProperColoring,
    r_plus,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
# additive constant of the acyclic w/4 + w^0.6/24 bound, reused for strong components
DAG_CONSTANT = Fraction(1, 24)
MIN_BLOCK_K = 7
EXACT_COLORING_MAX_N = 20


class CertificateError(DicutError, AssertionError):
    """A construction missed its own guarantee. Indicates a bug."""


class PreconditionError(DicutError, ValueError):
    pass


class NotIndependentError(PreconditionError):
    def __init__(self, message: str, arc: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.arc = arc


# -- random assignment schemes -----------------------------------------------

@dataclass(frozen=True)
class Unit:
    """One independent source of randomness.

    The unit owns ``items`` (disjoint vertex sets, each placed wholly on one
    side). It draws a count c from ``count_dist`` and then sends a uniformly
    random c-subset of its items to X, the rest to Y.
    """

    items: tuple[frozenset[int], ...]
    count_dist: tuple[tuple[int, Fraction], ...]
    kind: str = "split"

    def __post_init__(self) -> None:
        total = sum((p for _, p in self.count_dist), Fraction(0))
        if total != 1:
            raise ValueError(f"count distribution sums to {total}")
        for c, p in self.count_dist:
            if not 0 <= c <= len(self.items) or p < 0:
                raise ValueError(f"bad count {c} with probability {p}")

    @classmethod
    def coin(cls, vertices: Iterable[int], p: Fraction) -> "Unit":
        p = Fraction(p)
        return cls((frozenset(vertices),), _dist([(1, p), (0, 1 - p)]), "coin")

    @classmethod
    def split(cls, classes: Sequence[Iterable[int]], x_count: int) -> "Unit":
        return cls(tuple(frozenset(c) for c in classes), ((x_count, Fraction(1)),), "split")

    @classmethod
    def pair(cls, x_part: Iterable[int], y_part: Iterable[int]) -> "Unit":
        """Fair coin deciding which of the two parts goes to X."""
        return cls((frozenset(x_part), frozenset(y_part)), ((1, Fraction(1)),), "component")

    @classmethod
    def balanced(cls, classes: Sequence[Iterable[int]]) -> "Unit":
        """Split into sizes differing by at most one, larger half to X with probability 1/2."""
        m = len(classes)
        return cls(tuple(frozenset(c) for c in classes), _dist([(m // 2, HALF), ((m + 1) // 2, HALF)]), "balanced")


def _dist(pairs: Iterable[tuple[int, Fraction]]) -> tuple[tuple[int, Fraction], ...]:
    acc: dict[int, Fraction] = {}
    for c, p in pairs:
        acc[c] = acc.get(c, Fraction(0)) + p
    return tuple((c, p) for c, p in sorted(acc.items()) if p)


class _UnitState:
    """Posterior of one unit given some of its items are already placed."""

    __slots__ = ("unit", "side", "dx", "dy")

    def __init__(self, unit: Unit):
        self.unit = unit
        self.side: list[Optional[bool]] = [None] * len(unit.items)
        self.dx = 0
        self.dy = 0

    def set(self, item: int, in_x: Optional[bool]) -> None:
        old = self.side[item]
        if old is True:
            self.dx -= 1
        elif old is False:
            self.dy -= 1
        self.side[item] = in_x
        if in_x is True:
            self.dx += 1
        elif in_x is False:
            self.dy += 1

    def stats(self) -> tuple[Fraction, Fraction]:
        """(P(undecided item in X), P(item a in X and item b in Y)) for distinct undecided a, b."""
        m = len(self.unit.items)
        r = m - self.dx - self.dy
        weights = []
        for c, p in self.unit.count_dist:
            need = c - self.dx
            if 0 <= need <= r:
                weights.append((need, p * Fraction(comb(r, need), comb(m, c))))
        total = sum((w for _, w in weights), Fraction(0))
        if total == 0:
            raise ValueError("partial assignment has probability zero")
        if r == 0:
            return Fraction(0), Fraction(0)
        px = sum((w * need for need, w in weights), Fraction(0)) / (total * r)
        if r == 1:
            return px, Fraction(0)
        pxy = sum((w * need * (r - need) for need, w in weights), Fraction(0)) / (total * r * (r - 1))
        return px, pxy


@dataclass(frozen=True)
class AssignmentScheme:
    """A random dicut built from independent units covering every vertex once."""

    n: int
    units: tuple[Unit, ...]
    label: str = ""
    _where: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        where: list[Optional[tuple[int, int]]] = [None] * self.n
        for ui, unit in enumerate(self.units):
            for ii, item in enumerate(unit.items):
                for v in item:
                    if not 0 <= v < self.n:
                        raise ValueError(f"vertex {v} outside [0, {self.n})")
                    if where[v] is not None:
                        raise ValueError(f"vertex {v} assigned by two units")
                    where[v] = (ui, ii)
        missing = [v for v, loc in enumerate(where) if loc is None]
        if missing:
            raise ValueError(f"vertices {missing} are not covered by any unit")
        object.__setattr__(self, "_where", tuple(where))  # type: ignore[arg-type]

    def locate(self, v: int) -> tuple[int, int]:
        return self._where[v]

    def _arc_prob(self, u: int, v: int, states: Sequence[_UnitState], stats: Sequence[tuple[Fraction, Fraction]]) -> Fraction:
        (ua, ia), (ub, ib) = self._where[u], self._where[v]
        if ua == ub and ia == ib:
            return Fraction(0)
        sa, sb = states[ua].side[ia], states[ub].side[ib]
        if ua == ub:
            px, pxy = stats[ua]
            if sa is not None and sb is not None:
                return Fraction(int(sa and not sb))
            if sa is False or sb is True:
                return Fraction(0)
            if sa is True:
                return 1 - px
            if sb is False:
                return px
            return pxy
        pa = Fraction(int(sa)) if sa is not None else stats[ua][0]
        pb = Fraction(int(sb)) if sb is not None else stats[ub][0]
        return pa * (1 - pb)

    def _fresh_states(self) -> list[_UnitState]:
        return [_UnitState(u) for u in self.units]

    def arc_probability(self, u: int, v: int, fixed: Optional[Mapping[int, bool]] = None) -> Fraction:
        """P(u in X, v in Y), optionally conditioned on placed vertices."""
        states = self._fresh_states()
        for x, in_x in (fixed or {}).items():
            ui, ii = self._where[x]
            states[ui].set(ii, in_x)
        stats = [s.stats() for s in states]
        return self._arc_prob(u, v, states, stats)

    def expectation(self, d: WeightedDigraph, fixed: Optional[Mapping[int, bool]] = None) -> Fraction:
        if d.n != self.n:
            raise ValueError("scheme and digraph disagree on the vertex count")
        states = self._fresh_states()
        for x, in_x in (fixed or {}).items():
            ui, ii = self._where[x]
            states[ui].set(ii, in_x)
        stats = [s.stats() for s in states]
        return sum((w * self._arc_prob(t, h, states, stats) for t, h, w in d.arcs), Fraction(0))

    def derandomize(self, d: WeightedDigraph) -> Dicut:
        return derandomize(self, d)

    def sample(self, rng: random.Random) -> Dicut:
        x: set[int] = set()
        for unit in self.units:
            den = 1
            for _, p in unit.count_dist:
                den = den * p.denominator // _gcd(den, p.denominator)
            draw = rng.randrange(den)
            acc = 0
            count = unit.count_dist[-1][0]
            for c, p in unit.count_dist:
                acc += int(p * den)
                if draw < acc:
                    count = c
                    break
            for idx in rng.sample(range(len(unit.items)), count):
                x |= unit.items[idx]
        return Dicut(frozenset(x))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def derandomize(scheme: AssignmentScheme, d: WeightedDigraph) -> Dicut:
    """Method of conditional expectations over the scheme's items.

    Items are fixed in unit order, then item order; each goes to the side with
    the larger conditional expectation, ties to X. Only arcs touching the
    current unit change their probability, so only those are re-evaluated.
    """
    if d.n != scheme.n:
        raise ValueError("scheme and digraph disagree on the vertex count")
    states = scheme._fresh_states()
    stats = [s.stats() for s in states]
    touching: list[list[tuple[int, int, Fraction]]] = [[] for _ in scheme.units]
    for t, h, w in d.arcs:
        ut, uh = scheme.locate(t)[0], scheme.locate(h)[0]
        touching[ut].append((t, h, w))
        if uh != ut:
            touching[uh].append((t, h, w))

    def local(ui: int) -> Fraction:
        return sum((w * scheme._arc_prob(t, h, states, stats) for t, h, w in touching[ui]), Fraction(0))

    for ui, unit in enumerate(scheme.units):
        st = states[ui]
        for ii in range(len(unit.items)):
            px = stats[ui][0]
            if px == 0 or px == 1:
                st.set(ii, px == 1)
                stats[ui] = st.stats()
                continue
            st.set(ii, True)
            stats[ui] = st.stats()
            e_x = local(ui)
            st.set(ii, False)
            stats[ui] = st.stats()
            e_y = local(ui)
            if e_x >= e_y:
                st.set(ii, True)
                stats[ui] = st.stats()
    x = frozenset(v for ui, unit in enumerate(scheme.units)
                  for ii, item in enumerate(unit.items) if states[ui].side[ii] for v in item)
    return Dicut(x)


# -- helpers -----------------------------------------------------------------

def _finish(algorithm: str, d: WeightedDigraph, cut: Dicut, guarantee: Fraction,
            params: Mapping[str, Fraction], branch: str = "") -> tuple[Dicut, BoundCertificate]:
    achieved = dicut_weight(d, cut)
    cert = BoundCertificate(algorithm, guarantee, achieved, dict(params), branch)
    if not cert.holds:
        raise CertificateError(f"{algorithm}: achieved {achieved} < guaranteed {guarantee}")
    return cut, cert


def _empty(algorithm: str, d: WeightedDigraph) -> tuple[Dicut, BoundCertificate]:
    return _finish(algorithm, d, Dicut(), Fraction(0), {}, "zero-weight")


def _require_acyclic(d: WeightedDigraph) -> list[int]:
    try:
        return level_indices(d)
    except CyclicGraphError as exc:
        raise CyclicGraphError(f"construction needs an acyclic digraph: {exc}") from None


def _require_heavy_arcs(d: WeightedDigraph) -> None:
    for t, h, w in d.arcs:
        if w < 1:
            raise PreconditionError(f"arc ({t}, {h}) has weight {w} < 1")


# -- imbalance-based cuts ----------------------------------------------------

def positive_imbalance_cut(d: WeightedDigraph) -> tuple[Dicut, BoundCertificate]:
    """X = vertices of positive imbalance; weighs at least r+(D)."""
    r = imbalances(d)
    cut = Dicut(frozenset(v for v in range(d.n) if r[v] > 0))
    rp = r_plus(d)
    return _finish("rplus", d, cut, rp, {"r_plus": rp})


def theta_scheme(d: WeightedDigraph) -> AssignmentScheme:
    """Independent coins biased by p = theta / (2(1 - 2 theta)) towards X for
    positive-imbalance vertices and towards Y for the rest."""
    th = r_plus(d) / d.total_weight()
    if th >= ONE_THIRD:
        raise PreconditionError("biased scheme is only used for theta < 1/3")
    p_bar = th / (2 * (1 - 2 * th))
    r = imbalances(d)
    units = tuple(Unit.coin({v}, HALF + p_bar if r[v] > 0 else HALF - p_bar) for v in range(d.n))
    return AssignmentScheme(d.n, units, "theta")


def theta_biased_cut(d: WeightedDigraph) -> tuple[Dicut, BoundCertificate]:
    w = d.total_weight()
    if w == 0:
        return _empty("theta", d)
    th = r_plus(d) / w
    if th >= ONE_THIRD:
        cut, inner = positive_imbalance_cut(d)
        return _finish("theta", d, cut, th * w, {"theta": th}, "r-plus")
    scheme = theta_scheme(d)
    cut = derandomize(scheme, d)
    p_bar = th / (2 * (1 - 2 * th))
    return _finish("theta", d, cut, l_of_theta(th) * w, {"theta": th, "p_bar": p_bar}, "biased")


# -- colouring and bipartite-family cuts -------------------------------------

def coloring_coefficient(colors: int) -> Fraction:
    """Cut fraction of a balanced split of ``colors`` independent classes."""
    if colors <= 1:
        return HALF
    if colors % 2 == 0:
        return QUARTER + Fraction(1, 4 * (colors - 1))
    return QUARTER + Fraction(1, 4 * colors)


def coloring_scheme(d: WeightedDigraph, coloring: ProperColoring) -> AssignmentScheme:
    check_coloring(d, coloring)
    classes = coloring.classes()
    return AssignmentScheme(d.n, (Unit.split(classes, (len(classes) + 1) // 2),) if classes else (), "coloring")


def coloring_cut(d: WeightedDigraph, coloring: Optional[ProperColoring] = None) -> tuple[Dicut, BoundCertificate]:
    """Split the colour classes ceil/floor at random; default colouring is greedy."""
    if coloring is None:
        coloring = greedy_coloring(d)
    scheme = coloring_scheme(d, coloring)
    if d.total_weight() == 0:
        return _empty("coloring", d)
    chi = coloring.colors_used
    cut = derandomize(scheme, d)
    guarantee = coloring_coefficient(chi) * d.total_weight()
    return _finish("coloring", d, cut, guarantee, {"colors_used": Fraction(chi)})


def _family_weight(d: WeightedDigraph, components: Sequence[tuple[frozenset[int], frozenset[int]]]) -> Fraction:
    side: dict[int, tuple[int, int]] = {}
    for ci, (xs, ys) in enumerate(components):
        for v in xs:
            side[v] = (ci, 0)
        for v in ys:
            side[v] = (ci, 1)
    total = Fraction(0)
    for t, h, w in d.arcs:
        if t in side and h in side and side[t][0] == side[h][0] and side[t][1] != side[h][1]:
            total += w
    return total


def _normalize_family(d: WeightedDigraph, components) -> list[tuple[frozenset[int], frozenset[int]]]:
    fam = [(frozenset(xs), frozenset(ys)) for xs, ys in components]
    seen: set[int] = set()
    for xs, ys in fam:
        for v in xs | ys:
            if not 0 <= v < d.n:
                raise PreconditionError(f"vertex {v} outside [0, {d.n})")
        if (xs | ys) & seen or xs & ys:
            raise PreconditionError("family components must be vertex-disjoint")
        seen |= xs | ys
    where = {}
    for ci, (xs, ys) in enumerate(fam):
        for v in xs:
            where[v] = (ci, 0)
        for v in ys:
            where[v] = (ci, 1)
    for t, h, _ in d.arcs:
        if t in where and where.get(h) == where[t]:
            raise NotIndependentError(f"arc ({t}, {h}) lies inside one side of component {where[t][0]}", (t, h))
    return fam


def bipartite_family_scheme(d: WeightedDigraph, components) -> AssignmentScheme:
    fam = _normalize_family(d, components)
    covered = set().union(*(xs | ys for xs, ys in fam)) if fam else set()
    units = [Unit.pair(xs, ys) for xs, ys in fam]
    units.extend(Unit.coin({v}, HALF) for v in range(d.n) if v not in covered)
    return AssignmentScheme(d.n, tuple(units), "bipartite")


def bipartite_family_cut(d: WeightedDigraph, components) -> tuple[Dicut, BoundCertificate]:
    """Each component (X_i, Y_i) lands as (X_i -> X, Y_i -> Y) or reversed by a
    fair coin; other vertices flip their own coin. Arcs between X_i and Y_i
    are cut with probability 1/2, all others with 1/4."""
    scheme = bipartite_family_scheme(d, components)
    fam = _normalize_family(d, components)
    wr = _family_weight(d, fam)
    cut = derandomize(scheme, d)
    w = d.total_weight()
    return _finish("bipartite", d, cut, w / 4 + wr / 4, {"family_weight": wr, "components": Fraction(len(fam))})


def greedy_matching(d: WeightedDigraph) -> list[tuple[int, int]]:
    """Vertex-disjoint arcs picked heaviest first (ties by arc order)."""
    used: set[int] = set()
    chosen = []
    for t, h, _ in sorted(d.arcs, key=lambda a: -a.weight):
        if t not in used and h not in used:
            used |= {t, h}
            chosen.append((t, h))
    return chosen


def matching_cut(d: WeightedDigraph, matching: Optional[Sequence[tuple[int, int]]] = None) -> tuple[Dicut, BoundCertificate]:
    if matching is None:
        matching = greedy_matching(d)
    cut, cert = bipartite_family_cut(d, [({a}, {b}) for a, b in matching])
    return _finish("matching", d, cut, cert.guaranteed_weight, cert.params)


def _path_matchings(d: WeightedDigraph, path: Sequence[int]):
    pairs0 = [(path[i], path[i + 1]) for i in range(0, len(path) - 1, 2)]
    pairs1 = [(path[i], path[i + 1]) for i in range(1, len(path) - 1, 2)]
    w0 = _family_weight(d, [(frozenset({a}), frozenset({b})) for a, b in pairs0])
    w1 = _family_weight(d, [(frozenset({a}), frozenset({b})) for a, b in pairs1])
    return pairs0, w0, pairs1, w1


def path_matching_cut(d: WeightedDigraph) -> tuple[Dicut, BoundCertificate]:
    """Split a longest path into its two alternating matchings and use the heavier."""
    _require_acyclic(d)
    path = longest_path(d)
    pairs0, w0, pairs1, w1 = _path_matchings(d, path)
    pairs = pairs0 if w0 >= w1 else pairs1
    cut, cert = bipartite_family_cut(d, [({a}, {b}) for a, b in pairs])
    params = {"path_order": Fraction(len(path)), "w_m0": w0, "w_m1": w1}
    return _finish("path-matching", d, cut, cert.guaranteed_weight, params)


# -- level blocks ------------------------------------------------------------

def block_z(k: int) -> int:
    """floor(sqrt(k/2))."""
    return isqrt(k // 2)


def block_f(k: int, q: int) -> int:
    return (2 * k - 2 * q * q - q) // 2


def block_size(k: int, q: int) -> int:
    return 2 * block_f(k, q) + q


def n_star(k: int) -> int:
    return 2 * k + 2 * sum(block_size(k, q) for q in range(1, block_z(k) + 1))


def block_pair_cut_probability(k: int, q: int) -> Fraction:
    """P(s1 in X, s2 in Y) for a uniform split of a block with f(q)+q in X and f(q) in Y."""
    f = block_f(k, q)
    return Fraction(f + q, 2 * f + q) * Fraction(f, 2 * f + q - 1)


def block_target(k: int) -> Fraction:
    return Fraction(k, 4 * k - 2)


def smallest_block_k(nu: int) -> int:
    k = MIN_BLOCK_K
    while n_star(k) < nu:
        k += 1
    return k


def block_layout(k: int) -> list[tuple[int, int, int]]:
    """(block index i, size, |X_i|) for A_-z .. A_z in level order."""
    z = block_z(k)
    out = [(-q, block_size(k, q), block_f(k, q) + q) for q in range(z, 0, -1)]
    out.append((0, 2 * k, k))
    out.extend((q, block_size(k, q), block_f(k, q)) for q in range(1, z + 1))
    return out


def block_membership_probabilities(k: int) -> list[Fraction]:
    """P(a vertex of block A_i lies in X), listed for i = -z..z."""
    return [Fraction(x, size) for _, size, x in block_layout(k)]


def dag_block_scheme(d: WeightedDigraph, k: Optional[int] = None) -> tuple[AssignmentScheme, int, int]:
    """Levels padded with empty trailing levels up to n*_k, grouped into the
    blocks A_-z..A_z; each block is split uniformly with its fixed sizes."""
    idx = _require_acyclic(d)
    nu = max(idx) + 1 if idx else 0
    if k is None:
        k = smallest_block_k(max(nu, 1))
    if k < MIN_BLOCK_K:
        raise PreconditionError(f"block construction needs k >= {MIN_BLOCK_K}, got {k}")
    total = n_star(k)
    if nu > total:
        raise PreconditionError(f"{nu} levels exceed n*_{k} = {total}; pick a larger k")
    levels: list[set[int]] = [set() for _ in range(total)]
    for v, i in enumerate(idx):
        levels[i].add(v)
    units = []
    pos = 0
    for _, size, x_count in block_layout(k):
        units.append(Unit.split(levels[pos:pos + size], x_count))
        pos += size
    assert pos == total
    return AssignmentScheme(d.n, tuple(units), "dag-block"), k, nu


def dag_block_cut(d: WeightedDigraph, k: Optional[int] = None) -> tuple[Dicut, BoundCertificate]:
    scheme, k, nu = dag_block_scheme(d, k)
    target = block_target(k)
    # per-arc check on the level-contracted digraph: one representative vertex per level
    contracted = contract_levels(d)
    idx = level_indices(d)
    rep = {}
    for v, i in enumerate(idx):
        rep.setdefault(i, v)
    for i, j, _ in contracted.arcs:
        p = scheme.arc_probability(rep[i], rep[j])
        if p < target:
            raise CertificateError(f"level arc {i}->{j} cut with probability {p} < {target}")
    cut = derandomize(scheme, d)
    params = {"k": Fraction(k), "levels": Fraction(nu), "n_star": Fraction(n_star(k)),
              "blocks": Fraction(2 * block_z(k) + 1)}
    return _finish("dag-block", d, cut, target * d.total_weight(), params)


def dag_cut(d: WeightedDigraph) -> tuple[Dicut, BoundCertificate]:
    """Acyclic digraph with every arc weight >= 1: a dicut of weight at least
    w/4 + w^0.6/24, certified with a dyadic lower bound on w^0.6.

    A longest path of order at least w^0.6 gives the path-matching cut;
    otherwise the better of the level-colouring cut and the block cut.
    """
    _require_acyclic(d)
    _require_heavy_arcs(d)
    w = d.total_weight()
    if w == 0:
        return _empty("dag", d)
    g = pow_three_fifths_lower(w)
    guarantee = w / 4 + g * DAG_CONSTANT
    path_order = len(longest_path(d))
    params = {"path_order": Fraction(path_order), "w_pow_lower": g}
    if at_least_power(path_order, w, 3, 5):
        cut, sub = path_matching_cut(d)
        branch = "path-matching"
    else:
        options = [coloring_cut(d, path_coloring(d))]
        options.append(dag_block_cut(d, smallest_block_k(path_order)))
        cut, sub = max(options, key=lambda o: o[1].guaranteed_weight)
        branch = sub.algorithm
        if "k" in sub.params:
            params["k"] = sub.params["k"]
    params["branch_guarantee"] = sub.guaranteed_weight
    if sub.guaranteed_weight < guarantee:
        raise CertificateError(f"dag: {branch} branch guarantees {sub.guaranteed_weight} < {guarantee}")
    return _finish("dag", d, cut, guarantee, params, branch)


# -- strong components -------------------------------------------------------

def component_coloring(d: WeightedDigraph, vertices: Sequence[int]) -> list[frozenset[int]]:
    """Colour classes (original ids) of the subdigraph induced by ``vertices``."""
    sub, old = d.induced(vertices)
    if sub.n <= EXACT_COLORING_MAX_N:
        col = exact_coloring(sub, EXACT_COLORING_MAX_N)
    else:
        col = min((greedy_coloring(sub), path_coloring(sub)), key=lambda c: c.colors_used)
    return [frozenset(old[v] for v in cls) for cls in col.classes()]


def strong_component_scheme(d: WeightedDigraph) -> tuple[AssignmentScheme, int]:
    """Per strong component, a balanced random split of its colour classes
    whose larger half goes to X with probability 1/2. Returns the scheme and
    the largest number of colours used by a component."""
    cond = condensation(d)
    units = []
    most = 1
    for comp in cond.components:
        classes = component_coloring(d, comp)
        most = max(most, len(classes))
        units.append(Unit.balanced(classes))
    return AssignmentScheme(d.n, tuple(units), "scc"), most


def strong_component_cut(d: WeightedDigraph) -> tuple[Dicut, BoundCertificate]:
    """Digraph with every arc weight >= 1.

    Two candidate cuts: the acyclic bound applied to the condensation, and the
    per-component colouring split. The better one weighs at least
    ``w/4 + K (w_a^0.6 + w_s) / ((4K+1) L + 1)`` where ``w_s`` is the weight
    inside strong components, ``w_a`` the rest, K = 1/24 and L the largest
    number of colours a component needed.
    """
    _require_heavy_arcs(d)
    w = d.total_weight()
    if w == 0:
        return _empty("scc", d)
    cond = condensation(d)
    if all(len(c) == 1 for c in cond.components):
        cut, cert = dag_cut(d)
        return _finish("scc", d, cut, cert.guaranteed_weight, cert.params, "acyclic")

    w_s = cond.internal_weight
    w_a = w - w_s
    q_cut, q_cert = dag_cut(cond.quotient)
    lifted = Dicut(frozenset(v for ci in q_cut.x_side for v in cond.components[ci]))

    scheme, colors = strong_component_scheme(d)
    expected = scheme.expectation(d)
    if expected < w / 4 + w_s / (4 * colors):
        raise CertificateError(f"scc: colouring split expects {expected} below w/4 + w_s/(4L)")
    split_cut = derandomize(scheme, d)

    g_a = pow_three_fifths_lower(w_a)
    guarantee = w / 4 + DAG_CONSTANT * (g_a + w_s) / ((4 * DAG_CONSTANT + 1) * colors + 1)
    lifted_w, split_w = dicut_weight(d, lifted), dicut_weight(d, split_cut)
    cut, branch = (lifted, "condensation") if lifted_w >= split_w else (split_cut, "coloring-split")
    params = {"colors": Fraction(colors), "w_strong": w_s, "w_acyclic": w_a, "w_acyclic_pow_lower": g_a,
              "condensation_cut": lifted_w, "split_cut": split_w}
    return _finish("scc", d, cut, guarantee, params, branch)


# -- registry ----------------------------------------------------------------

ALGORITHMS = ("rplus", "theta", "coloring", "bipartite", "matching", "path-matching", "dag-block", "dag", "scc")


def random_scheme(algorithm: str, d: WeightedDigraph, **options) -> Optional[AssignmentScheme]:
    """The random cut a constructor rounds, for best-of-T sampling.

    ``None`` for deterministic constructions; for ``dag`` and ``scc`` the
    scheme of the branch the constructor would take.
    """
    if algorithm == "rplus":
        return None
    if algorithm == "theta":
        w = d.total_weight()
        if w == 0 or r_plus(d) / w >= ONE_THIRD:
            return None
        return theta_scheme(d)
    if algorithm == "coloring":
        return coloring_scheme(d, options.get("coloring") or greedy_coloring(d))
    if algorithm in ("bipartite", "matching"):
        comps = options.get("components")
        if comps is None:
            comps = [({a}, {b}) for a, b in greedy_matching(d)]
        return bipartite_family_scheme(d, comps)
    if algorithm == "path-matching":
        _require_acyclic(d)
        pairs0, w0, pairs1, w1 = _path_matchings(d, longest_path(d))
        pairs = pairs0 if w0 >= w1 else pairs1
        return bipartite_family_scheme(d, [({a}, {b}) for a, b in pairs])
    if algorithm == "dag-block":
        return dag_block_scheme(d, options.get("k"))[0]
    if algorithm == "dag":
        _, cert = dag_cut(d)
        if cert.branch == "path-matching":
            return random_scheme("path-matching", d)
        if cert.branch == "dag-block":
            return dag_block_scheme(d, int(cert.params["k"]))[0]
        if cert.branch == "coloring":
            return coloring_scheme(d, path_coloring(d))
        return None
    if algorithm == "scc":
        _require_heavy_arcs(d)
        if all(len(c) == 1 for c in condensation(d).components):
            return random_scheme("dag", d)
        return strong_component_scheme(d)[0]
    raise KeyError(f"unknown algorithm {algorithm!r}; expected one of {', '.join(ALGORITHMS)}")


def construct(algorithm: str, d: WeightedDigraph, **options) -> tuple[Dicut, BoundCertificate]:
    """Dispatch on a CLI algorithm id."""
    if algorithm == "rplus":
        return positive_imbalance_cut(d)
    if algorithm == "theta":
        return theta_biased_cut(d)
    if algorithm == "coloring":
        return coloring_cut(d, options.get("coloring"))
    if algorithm == "bipartite":
        comps = options.get("components")
        if comps is None:
            comps = [({a}, {b}) for a, b in greedy_matching(d)]
        return bipartite_family_cut(d, comps)
    if algorithm == "matching":
        return matching_cut(d, options.get("matching"))
    if algorithm == "path-matching":
        return path_matching_cut(d)
    if algorithm == "dag-block":
        return dag_block_cut(d, options.get("k"))
    if algorithm == "dag":
        return dag_cut(d)
    if algorithm == "scc":
        return strong_component_cut(d)
    raise KeyError(f"unknown algorithm {algorithm!r}; expected one of {', '.join(ALGORITHMS)}")
