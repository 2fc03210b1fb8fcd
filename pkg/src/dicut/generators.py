"""Instance families: extremal constructions and seeded random corpora.

Random families draw from :class:`random.Random` seeded with the given
integer. CPython's Mersenne Twister and its integer seeding are the same on
every platform, so a seed pins the instance byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Sequence

from .graph_core import Arc, WeightedDigraph, make_digraph, to_rational, RationalLike
from .measures import theta as theta_of

ONE = Fraction(1)
TWO = Fraction(2)


def regular_tournament(k: int) -> WeightedDigraph:
    """The k-regular tournament on 2k+1 vertices: i -> i+j (mod 2k+1), j = 1..k."""
    if k < 1:
        raise ValueError(f"regular tournament needs k >= 1, got {k}")
    n = 2 * k + 1
    return make_digraph(n, [(i, (i + j) % n, 1) for i in range(n) for j in range(1, k + 1)])


def two_tournament(k: int, theta: RationalLike) -> WeightedDigraph:
    """Two order-k regular tournaments A, B plus every arc A -> B at weight Q.

    ``Q = theta (1 - 1/k) / (1 - theta)`` is chosen so that the result has
    imbalance ratio exactly ``theta``.
    """
    t = to_rational(theta)
    if k < 3 or k % 2 == 0:
        raise ValueError(f"regular tournaments of order k exist only for odd k; need odd k >= 3, got {k}")
    if not 0 <= t < 1:
        raise ValueError(f"theta must satisfy 0 <= theta < 1, got {t}")
    q = two_tournament_q(k, t)
    half = (k - 1) // 2
    arcs: list[tuple[int, int, Fraction]] = []
    for offset in (0, k):
        arcs.extend((offset + i, offset + (i + j) % k, ONE) for i in range(k) for j in range(1, half + 1))
    arcs.extend((a, k + b, q) for a in range(k) for b in range(k))
    d = make_digraph(2 * k, arcs)
    assert theta_of(d) == t
    return d


def two_tournament_q(k: int, theta: RationalLike) -> Fraction:
    t = to_rational(theta)
    return t * (1 - Fraction(1, k)) / (1 - t)


def mac_upper_two_tournament(k: int, q: RationalLike) -> Fraction:
    """Maximum of ``Q x y + x(k-x)/2 + y(k-y)/2`` over the square [0, k]^2."""
    q = to_rational(q)
    if not 0 < q < 1:
        raise ValueError(f"Q must lie in (0, 1), got {q}")
    if q <= Fraction(1, 2):
        return Fraction(k * k) / (4 * (1 - q))
    return q * k * k


def staircase_arc_count(n: int) -> int:
    """nq^2/2 - nq/2 - q^3/6 + q/6 with q = floor(sqrt(n))."""
    q = isqrt(n)
    total = 3 * n * q * q - 3 * n * q - q ** 3 + q
    assert total % 6 == 0
    return total // 6


def staircase(n: int) -> WeightedDigraph:
    """Union of the n cyclic windows of q = floor(sqrt n) consecutive vertices,
    each a forward transitive tournament, with every wrap-around arc removed.

    Parallel arcs are kept, so this is a multigraph. Acyclic, longest path n.
    """
    if n < 4:
        raise ValueError(f"staircase needs n >= 4, got {n}")
    q = isqrt(n)
    arcs = []
    for i in range(n):
        window = [(i + s) % n for s in range(q)]
        arcs.extend(Arc(a, b, ONE) for a, b in combinations(window, 2) if a < b)
    d = WeightedDigraph(n, tuple(arcs))
    assert d.m == staircase_arc_count(n)
    return d


def staircase_order_for(m: int) -> int:
    """Smallest n with staircase_arc_count(n) >= m."""
    if m < 1:
        raise ValueError(f"need m >= 1 arcs, got {m}")
    n = 4
    while staircase_arc_count(n) < m:
        n += 1
    return n


def staircase_trimmed(m: int) -> WeightedDigraph:
    """A staircase with exactly m arcs.

    Takes the smallest staircase with at least m arcs and drops the surplus,
    largest (tail, head, multiplicity) first; remaining arcs keep their order.
    """
    n = staircase_order_for(m)
    d = staircase(n)
    seen: dict[tuple[int, int], int] = {}
    keyed = []
    for idx, (t, h, _) in enumerate(d.arcs):
        mult = seen.get((t, h), 0)
        seen[(t, h)] = mult + 1
        keyed.append(((t, h, mult), idx))
    surplus = d.m - m
    drop = {idx for _, idx in sorted(keyed)[d.m - surplus:]} if surplus else set()
    return d.subgraph_arcs(i for i in range(d.m) if i not in drop)


# Arc lists of the small extremal DAGs; vertex s_i is id i-1.
_EXTREMAL: dict[int, tuple[tuple[int, int, int], ...]] = {
    3: ((1, 2, 1), (2, 3, 1)),
    4: ((1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 3, 1)),
    5: ((1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (2, 4, 1)),
    6: ((1, 2, 2), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1),
        (1, 3, 1), (2, 4, 1), (2, 5, 1), (3, 5, 1)),
    7: ((1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1),
        (2, 4, 1), (4, 6, 1)),
    8: ((1, 2, 2), (2, 3, 2), (3, 4, 2), (4, 5, 2), (5, 6, 2), (6, 7, 2), (7, 8, 2),
        (2, 4, 2), (5, 7, 2),
        (2, 5, 1), (3, 5, 1), (4, 6, 1), (4, 7, 1)),
}


def appendix_extremal(nu: int) -> WeightedDigraph:
    """DAG with longest path order nu whose max dicut is exactly c_nu * w."""
    if nu not in _EXTREMAL:
        raise ValueError(f"extremal instances exist for nu in 3..8, got {nu}")
    return make_digraph(nu, [(a - 1, b - 1, w) for a, b, w in _EXTREMAL[nu]])


def complete_transitive_dag(nu: int) -> WeightedDigraph:
    if nu < 2:
        raise ValueError(f"need nu >= 2, got {nu}")
    return make_digraph(nu, [(i, j, 1) for i, j in combinations(range(nu), 2)])


# -- random corpora ----------------------------------------------------------

def _check_random_params(n: int, density: RationalLike, weight_range: Sequence[int], weight_denominator: int) -> Fraction:
    p = to_rational(density)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not 0 <= p <= 1:
        raise ValueError(f"density must lie in [0, 1], got {p}")
    lo, hi = weight_range
    if lo < 0 or hi < lo:
        raise ValueError(f"bad weight range {weight_range}")
    if weight_denominator < 1:
        raise ValueError("weight_denominator must be positive")
    return p


def _weight(rng: random.Random, weight_range: Sequence[int], den: int) -> Fraction:
    lo, hi = weight_range
    return Fraction(rng.randint(lo * den, hi * den), den)


def _coin(rng: random.Random, p: Fraction) -> bool:
    # exact Bernoulli(p) for rational p
    return rng.randrange(p.denominator) < p.numerator


def random_dag(n: int, density: RationalLike = Fraction(1, 2), weight_range: Sequence[int] = (1, 5),
               seed: int = 0, weight_denominator: int = 1) -> WeightedDigraph:
    """Each forward pair of a hidden random topological order becomes an arc
    with probability ``density``."""
    p = _check_random_params(n, density, weight_range, weight_denominator)
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = []
    for i, j in combinations(range(n), 2):
        if _coin(rng, p):
            arcs.append(Arc(order[i], order[j], _weight(rng, weight_range, weight_denominator)))
    return WeightedDigraph(n, tuple(arcs))


def random_digraph(n: int, density: RationalLike = Fraction(1, 2), weight_range: Sequence[int] = (1, 5),
                   seed: int = 0, weight_denominator: int = 1) -> WeightedDigraph:
    """Each ordered pair (u, v), u != v, becomes an arc with probability ``density``."""
    p = _check_random_params(n, density, weight_range, weight_denominator)
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and _coin(rng, p):
                arcs.append(Arc(u, v, _weight(rng, weight_range, weight_denominator)))
    return WeightedDigraph(n, tuple(arcs))


def random_bounded_cycle(n: int, l: int, seed: int = 0, density: RationalLike = Fraction(1, 2),
                         weight_range: Sequence[int] = (1, 3)) -> WeightedDigraph:
    """Digraph whose every directed cycle has length at most ``l``.

    Vertices are cut into consecutive groups of at most ``l``; arbitrary arcs
    appear inside a group, and between groups only from earlier to later.
    """
    if l < 1:
        raise ValueError(f"cycle bound must be >= 1, got {l}")
    p = _check_random_params(n, density, weight_range, 1)
    rng = random.Random(seed)
    group = [v // l for v in range(n)]
    arcs = []
    for u in range(n):
        for v in range(n):
            if u == v or group[u] > group[v]:
                continue
            if _coin(rng, p):
                arcs.append(Arc(u, v, _weight(rng, weight_range, 1)))
    return WeightedDigraph(n, tuple(arcs))
