"""Scalar and structural quantities of weighted digraphs.

Imbalance ``r(v)`` is out-weight minus in-weight; ``r_plus`` sums the
positive imbalances and ``theta`` normalises it by the total weight.
Structural helpers (strong components, source-peeling levels, longest
paths, proper colourings of the underlying graph) feed the cut
constructions.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .graph_core import Arc, DicutError, WeightedDigraph, to_rational, RationalLike


class ZeroWeightError(DicutError, ValueError):
    pass


class CyclicGraphError(DicutError, ValueError):
    pass


class ImproperColoringError(DicutError, ValueError):
    pass


ONE_THIRD = Fraction(1, 3)


def total_weight(d: WeightedDigraph) -> Fraction:
    return d.total_weight()


def imbalances(d: WeightedDigraph) -> list[Fraction]:
    r = [Fraction(0)] * d.n
    for t, h, w in d.arcs:
        r[t] += w
        r[h] -= w
    return r


def imbalance(d: WeightedDigraph, v: int) -> Fraction:
    if not 0 <= v < d.n:
        raise IndexError(f"vertex {v} not in [0, {d.n})")
    out = sum((a.weight for a in d.out_arcs[v]), Fraction(0))
    inc = sum((a.weight for a in d.in_arcs[v]), Fraction(0))
    return out - inc


def r_plus(d: WeightedDigraph) -> Fraction:
    r = imbalances(d)
    positive = sum((x for x in r if x > 0), Fraction(0))
    half_abs = sum((abs(x) for x in r), Fraction(0)) / 2
    assert positive == half_abs, "imbalances do not sum to zero"
    return positive


def theta(d: WeightedDigraph) -> Fraction:
    w = d.total_weight()
    if w == 0:
        raise ZeroWeightError("theta is undefined for a digraph of total weight 0")
    return r_plus(d) / w


def l_of_theta(t: RationalLike) -> Fraction:
    """Best possible coefficient c with mac(D) >= c * w(D) for theta(D) = t."""
    t = to_rational(t)
    if not 0 <= t <= 1:
        raise ValueError(f"theta must lie in [0, 1], got {t}")
    if t < ONE_THIRD:
        return Fraction(1, 4) + t * t / (4 * (1 - 2 * t))
    return t


def max_semidegree(d: WeightedDigraph) -> int:
    """min(max out-degree, max in-degree), counting distinct neighbours."""
    if d.n == 0:
        return 0
    outs = [len({a.head for a in arcs}) for arcs in d.out_arcs]
    ins = [len({a.tail for a in arcs}) for arcs in d.in_arcs]
    return min(max(outs), max(ins))


def underlying_graph(d: WeightedDigraph) -> WeightedDigraph:
    """One arc ``(u, v, w)`` with ``u < v`` per adjacent pair, weights summed.

    The result is the undirected underlying graph encoded as a digraph; the
    direction of its arcs carries no meaning.
    """
    acc: dict[tuple[int, int], Fraction] = {}
    for t, h, w in d.arcs:
        key = (t, h) if t < h else (h, t)
        acc[key] = acc.get(key, Fraction(0)) + w
    return WeightedDigraph(d.n, tuple(Arc(u, v, w) for (u, v), w in sorted(acc.items())))


# -- strong components -------------------------------------------------------

def strong_components(d: WeightedDigraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in topological order
    of the condensation (sources first)."""
    index: list[Optional[int]] = [None] * d.n
    low = [0] * d.n
    on_stack = [False] * d.n
    stack: list[int] = []
    comps: list[list[int]] = []
    succ = [[a.head for a in arcs] for arcs in d.out_arcs]
    counter = 0
    for root in range(d.n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                u = succ[v][i]
                if index[u] is None:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, 0))
                elif on_stack[u]:
                    low[v] = min(low[v], index[u])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                comps.append(sorted(comp))
    comps.reverse()
    return comps


class Condensation(NamedTuple):
    quotient: WeightedDigraph
    component_of: list[int]
    internal_weight: Fraction
    components: list[list[int]]


def condensation(d: WeightedDigraph) -> Condensation:
    """Contract strong components; parallel quotient arcs are merged by summing."""
    comps = strong_components(d)
    comp_of = [0] * d.n
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    internal = Fraction(0)
    merged: dict[tuple[int, int], Fraction] = {}
    for t, h, w in d.arcs:
        ct, ch = comp_of[t], comp_of[h]
        if ct == ch:
            internal += w
        else:
            merged[(ct, ch)] = merged.get((ct, ch), Fraction(0)) + w
    quotient = WeightedDigraph(len(comps), tuple(Arc(a, b, w) for (a, b), w in sorted(merged.items())))
    return Condensation(quotient, comp_of, internal, comps)


def is_acyclic(d: WeightedDigraph) -> bool:
    try:
        level_indices(d)
    except CyclicGraphError:
        return False
    return True


# -- levels and paths --------------------------------------------------------

def level_indices(d: WeightedDigraph) -> list[int]:
    """0-based level of each vertex under repeated source removal."""
    indeg = [len(arcs) for arcs in d.in_arcs]
    level = [0] * d.n
    frontier = [v for v in range(d.n) if indeg[v] == 0]
    seen = 0
    depth = 0
    while frontier:
        nxt = []
        for v in frontier:
            level[v] = depth
            seen += 1
            for a in d.out_arcs[v]:
                indeg[a.head] -= 1
                if indeg[a.head] == 0:
                    nxt.append(a.head)
        frontier = nxt
        depth += 1
    if seen != d.n:
        raise CyclicGraphError("digraph has a directed cycle")
    return level


@dataclass(frozen=True)
class LevelDecomposition:
    levels: tuple[frozenset[int], ...]

    @property
    def count(self) -> int:
        return len(self.levels)

    def level_of(self) -> dict[int, int]:
        return {v: i for i, lvl in enumerate(self.levels) for v in lvl}


def level_decomposition(d: WeightedDigraph) -> LevelDecomposition:
    idx = level_indices(d)
    buckets: dict[int, set[int]] = defaultdict(set)
    for v, i in enumerate(idx):
        buckets[i].add(v)
    return LevelDecomposition(tuple(frozenset(buckets[i]) for i in range(len(buckets))))


def contract_levels(d: WeightedDigraph) -> WeightedDigraph:
    """Contract each source-peeling level to a single vertex.

    Arc ``i -> j`` of the result carries the total weight of arcs from level
    ``i`` to level ``j``; every arc of the input crosses levels forwards, so no
    weight is lost.
    """
    idx = level_indices(d)
    nu = max(idx) + 1 if idx else 0
    merged: dict[tuple[int, int], Fraction] = {}
    for t, h, w in d.arcs:
        key = (idx[t], idx[h])
        merged[key] = merged.get(key, Fraction(0)) + w
    return WeightedDigraph(nu, tuple(Arc(i, j, w) for (i, j), w in sorted(merged.items())))


def longest_path(d: WeightedDigraph) -> list[int]:
    """A maximum-order directed path of an acyclic digraph.

    Starts at the smallest vertex that begins a longest path and always steps
    to the smallest admissible successor.
    """
    if d.n == 0:
        return []
    idx = level_indices(d)
    order = sorted(range(d.n), key=lambda v: -idx[v])
    height = [1] * d.n  # order of the longest path starting at v
    for v in order:
        for a in d.out_arcs[v]:
            height[v] = max(height[v], height[a.head] + 1)
    best = max(height)
    v = min(u for u in range(d.n) if height[u] == best)
    path = [v]
    while height[v] > 1:
        v = min(a.head for a in d.out_arcs[v] if height[a.head] == height[v] - 1)
        path.append(v)
    return path


def longest_path_order(d: WeightedDigraph) -> int:
    return len(longest_path(d))


# -- colourings --------------------------------------------------------------

@dataclass(frozen=True)
class ProperColoring:
    color_of: tuple[int, ...]

    @property
    def colors_used(self) -> int:
        return len(set(self.color_of))

    def classes(self) -> list[frozenset[int]]:
        """Nonempty colour classes ordered by colour id."""
        groups: dict[int, set[int]] = defaultdict(set)
        for v, c in enumerate(self.color_of):
            groups[c].add(v)
        return [frozenset(groups[c]) for c in sorted(groups)]


def check_coloring(d: WeightedDigraph, coloring: ProperColoring) -> None:
    if len(coloring.color_of) != d.n:
        raise ImproperColoringError(f"colouring has {len(coloring.color_of)} entries for {d.n} vertices")
    for t, h, _ in d.arcs:
        if coloring.color_of[t] == coloring.color_of[h]:
            raise ImproperColoringError(f"arc ({t}, {h}) joins two vertices of colour {coloring.color_of[t]}")


def greedy_coloring(d: WeightedDigraph) -> ProperColoring:
    """First-fit colouring in smallest-last (degeneracy) order.

    Uses at most degeneracy + 1 colours, so a digraph with out- or in-degree
    at most k gets at most 2k + 1.
    """
    nb = d.neighbors
    deg = {v: len(nb[v]) for v in range(d.n)}
    removed: set[int] = set()
    order = []
    for _ in range(d.n):
        v = min((u for u in deg if u not in removed), key=lambda u: (deg[u], u))
        removed.add(v)
        order.append(v)
        for u in nb[v]:
            if u not in removed:
                deg[u] -= 1
    color = [-1] * d.n
    for v in reversed(order):
        taken = {color[u] for u in nb[v]}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return ProperColoring(tuple(color))


def maximal_acyclic_subdigraph(d: WeightedDigraph) -> WeightedDigraph:
    """Keep arcs in input order unless they close a directed cycle."""
    succ: list[set[int]] = [set() for _ in range(d.n)]
    kept = []

    def reaches(src: int, dst: int) -> bool:
        seen = {src}
        todo = [src]
        while todo:
            v = todo.pop()
            if v == dst:
                return True
            for u in succ[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return False

    for i, (t, h, _) in enumerate(d.arcs):
        if not reaches(h, t):
            succ[t].add(h)
            kept.append(i)
    return d.subgraph_arcs(kept)


def path_coloring(d: WeightedDigraph) -> ProperColoring:
    """Colour each vertex by its level in a maximal acyclic spanning subdigraph.

    An arc left out of the subdigraph closes a cycle, so its head lies on a
    path to its tail and gets a strictly smaller level; arcs kept go strictly
    up. Hence the colouring is proper and uses at most the order of a longest
    path.
    """
    h = d if is_acyclic(d) else maximal_acyclic_subdigraph(d)
    return ProperColoring(tuple(level_indices(h)))


def exact_coloring(d: WeightedDigraph, max_n: int = 20) -> ProperColoring:
    """Minimum colouring by backtracking; only for small graphs."""
    if d.n > max_n:
        raise ValueError(f"exact colouring capped at {max_n} vertices, got {d.n}")
    if d.n == 0:
        return ProperColoring(())
    nb = d.neighbors
    best = list(greedy_coloring(d).color_of)
    best_k = len(set(best))
    order = sorted(range(d.n), key=lambda v: (-len(nb[v]), v))
    color = [-1] * d.n

    def search(pos: int, used: int) -> None:
        nonlocal best, best_k
        if used >= best_k:
            return
        if pos == d.n:
            best, best_k = color[:], used
            return
        v = order[pos]
        taken = {color[u] for u in nb[v]}
        for c in range(min(used + 1, best_k - 1)):
            if c not in taken:
                color[v] = c
                search(pos + 1, max(used, c + 1))
                color[v] = -1

    search(0, 0)
    return ProperColoring(tuple(best))


def renumber(coloring: Sequence[int]) -> ProperColoring:
    """Map colour ids onto 0..k-1 by first appearance."""
    ids: dict[int, int] = {}
    return ProperColoring(tuple(ids.setdefault(c, len(ids)) for c in coloring))
