"""Exact maximum dicut / maximum cut by enumeration of all vertex subsets.

``max_dicut_exact`` walks the subsets in Gray-code order and updates the cut
weight incrementally on each single-vertex flip. ``max_dicut_bruteforce``
recomputes every subset from scratch and exists to cross-check it.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterator

from .graph_core import Dicut, DicutError, WeightedDigraph

DEFAULT_MAX_N = 26
BRUTEFORCE_MAX_N = 20


class InstanceTooLargeError(DicutError):
    pass


def _integer_weights(d: WeightedDigraph) -> tuple[list[tuple[int, int, int]], int]:
    den = lcm(*(a.weight.denominator for a in d.arcs)) if d.arcs else 1
    return [(t, h, int(w * den)) for t, h, w in d.arcs], den


def _gray_values(n: int, flip_delta: Callable[[int, int, bool], int]) -> Iterator[tuple[int, int]]:
    """Yield ``(mask, value)`` for all masks of ``n`` bits, starting at 0.

    ``flip_delta(v, mask, entering)`` is the change of the objective when bit
    ``v`` toggles away from ``mask``.
    """
    mask = 0
    value = 0
    yield mask, value
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        entering = not (mask >> v) & 1
        value += flip_delta(v, mask, entering)
        mask ^= 1 << v
        yield mask, value


def _dicut_deltas(d: WeightedDigraph) -> tuple[Callable[[int, int, bool], int], int]:
    arcs, den = _integer_weights(d)
    outs: list[list[tuple[int, int]]] = [[] for _ in range(d.n)]
    ins: list[list[tuple[int, int]]] = [[] for _ in range(d.n)]
    for t, h, w in arcs:
        outs[t].append((h, w))
        ins[h].append((t, w))

    def delta(v: int, mask: int, entering: bool) -> int:
        # v in X cuts v->u for u outside X, and uncuts u->v for u inside X
        gain = sum(w for u, w in outs[v] if not (mask >> u) & 1)
        loss = sum(w for u, w in ins[v] if (mask >> u) & 1)
        return gain - loss if entering else loss - gain

    return delta, den


def max_dicut_exact(d: WeightedDigraph, max_n: int = DEFAULT_MAX_N) -> tuple[Dicut, Fraction]:
    """Maximum-weight dicut; ties go to the numerically smallest X bitmask."""
    if d.n > max_n:
        raise InstanceTooLargeError(f"{d.n} vertices exceeds the exact-solver cap of {max_n}")
    delta, den = _dicut_deltas(d)
    best_mask, best = 0, 0
    for mask, value in _gray_values(d.n, delta):
        if value > best or (value == best and mask < best_mask):
            best_mask, best = mask, value
    return Dicut.from_mask(best_mask), Fraction(best, den)


def min_dicut_exact(d: WeightedDigraph, max_n: int = DEFAULT_MAX_N) -> tuple[Dicut, Fraction]:
    """Minimum-weight dicut over partitions with both sides nonempty."""
    if d.n > max_n:
        raise InstanceTooLargeError(f"{d.n} vertices exceeds the exact-solver cap of {max_n}")
    if d.n < 2:
        raise ValueError("a partition into two nonempty sides needs at least 2 vertices")
    delta, den = _dicut_deltas(d)
    full = (1 << d.n) - 1
    best_mask, best = None, 0
    for mask, value in _gray_values(d.n, delta):
        if mask == 0 or mask == full:
            continue
        if best_mask is None or value < best or (value == best and mask < best_mask):
            best_mask, best = mask, value
    return Dicut.from_mask(best_mask), Fraction(best, den)


def max_dicut_bruteforce(d: WeightedDigraph) -> tuple[Dicut, Fraction]:
    if d.n > BRUTEFORCE_MAX_N:
        raise InstanceTooLargeError(f"brute force is capped at {BRUTEFORCE_MAX_N} vertices, got {d.n}")
    best_mask, best = 0, None
    for mask in range(1 << d.n):
        value = Fraction(0)
        for t, h, w in d.arcs:
            if (mask >> t) & 1 and not (mask >> h) & 1:
                value += w
        if best is None or value > best:
            best_mask, best = mask, value
    return Dicut.from_mask(best_mask), best


def max_cut_exact(g: WeightedDigraph, max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Maximum undirected cut; each arc of ``g`` is read as an undirected edge."""
    if g.n > max_n:
        raise InstanceTooLargeError(f"{g.n} vertices exceeds the exact-solver cap of {max_n}")
    if g.n < 2:
        return Fraction(0)
    arcs, den = _integer_weights(g)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for t, h, w in arcs:
        adj[t].append((h, w))
        adj[h].append((t, w))

    def delta(v: int, mask: int, _entering: bool) -> int:
        side = (mask >> v) & 1
        same = sum(w for u, w in adj[v] if (mask >> u) & 1 == side)
        other = sum(w for u, w in adj[v] if (mask >> u) & 1 != side)
        return same - other

    # vertex n-1 stays outside X: complementing a cut does not change its weight
    best = max(value for _, value in _gray_values(g.n - 1, delta))
    return Fraction(best, den)
