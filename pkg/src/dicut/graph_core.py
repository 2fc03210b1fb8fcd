"""Weighted directed multigraphs, dicuts and cut certificates.

All weights are :class:`fractions.Fraction` values; nothing in the core
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]


class DicutError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraphError(DicutError, ValueError):
    pass


class SelfLoopError(InvalidGraphError):
    pass


class NegativeWeightError(InvalidGraphError):
    pass


class VertexRangeError(InvalidGraphError):
    pass


class ParseError(InvalidGraphError):
    pass


def to_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Strings may be integers, decimal literals (``"0.25"``) or ``"p/q"``.
    Floats are rejected: they are rarely the exact value the caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a weight")
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass a string or Fraction")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    return Fraction(value)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Arc(NamedTuple):
    tail: int
    head: int
    weight: Fraction


@dataclass(frozen=True)
class WeightedDigraph:
    """Vertices ``0..n-1`` and an ordered multiset of weighted arcs.

    Parallel arcs and weight-0 arcs are kept distinct; self-loops are not
    allowed. Instances are immutable.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise VertexRangeError(f"negative vertex count {self.n}")
        n = self.n
        checked = []
        for idx, arc in enumerate(self.arcs):
            t, h, w = arc
            if not (0 <= t < n and 0 <= h < n):
                raise VertexRangeError(f"arc #{idx} ({t}, {h}) has an endpoint outside [0, {n})")
            if t == h:
                raise SelfLoopError(f"arc #{idx} is a self-loop at vertex {t}")
            if type(w) is not Fraction:
                w = to_rational(w)
            if w < 0:
                raise NegativeWeightError(f"arc #{idx} ({t}, {h}) has negative weight {w}")
            if type(arc) is Arc and type(t) is int and type(h) is int and w is arc[2]:
                checked.append(arc)
            else:
                checked.append(Arc(int(t), int(h), w))
        object.__setattr__(self, "arcs", tuple(checked))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def out_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        out: list[list[Arc]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            out[a.tail].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        inc: list[list[Arc]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            inc[a.head].append(a)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        """Neighbours in the underlying graph."""
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for t, h, _ in self.arcs:
            nb[t].add(h)
            nb[h].add(t)
        return tuple(frozenset(s) for s in nb)

    def total_weight(self) -> Fraction:
        return sum((a.weight for a in self.arcs), Fraction(0))

    def scaled(self, c: RationalLike) -> "WeightedDigraph":
        c = to_rational(c)
        return WeightedDigraph(self.n, tuple(Arc(t, h, w * c) for t, h, w in self.arcs))

    def subgraph_arcs(self, keep: Iterable[int]) -> "WeightedDigraph":
        """Same vertex set, only the arcs whose indices are in ``keep``."""
        idx = sorted(set(keep))
        return WeightedDigraph(self.n, tuple(self.arcs[i] for i in idx))

    def induced(self, vertices: Iterable[int]) -> tuple["WeightedDigraph", list[int]]:
        """Induced subdigraph, relabelled densely. Returns it with the new->old map."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        arcs = tuple(
            Arc(new_of[t], new_of[h], w) for t, h, w in self.arcs if t in new_of and h in new_of
        )
        return WeightedDigraph(len(old), arcs), old


def make_digraph(n: int, arcs: Iterable[tuple[int, int, RationalLike]] = ()) -> WeightedDigraph:
    return WeightedDigraph(n, tuple(Arc(t, h, to_rational(w)) for t, h, w in arcs))


@dataclass(frozen=True)
class Dicut:
    """The partition (X, V \\ X), stored as the X side."""

    x_side: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "x_side", frozenset(int(v) for v in self.x_side))

    @classmethod
    def from_mask(cls, mask: int) -> "Dicut":
        xs = []
        v = 0
        while mask:
            if mask & 1:
                xs.append(v)
            mask >>= 1
            v += 1
        return cls(frozenset(xs))

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.x_side)

    def complement(self, n: int) -> "Dicut":
        return Dicut(frozenset(range(n)) - self.x_side)

    def check(self, d: WeightedDigraph) -> None:
        bad = [v for v in self.x_side if not 0 <= v < d.n]
        if bad:
            raise VertexRangeError(f"dicut mentions vertices {sorted(bad)} outside [0, {d.n})")

    def sorted(self) -> list[int]:
        return sorted(self.x_side)


def as_dicut(cut: Union[Dicut, Iterable[int]]) -> Dicut:
    return cut if isinstance(cut, Dicut) else Dicut(frozenset(cut))


def dicut_weight(d: WeightedDigraph, cut: Union[Dicut, Iterable[int]]) -> Fraction:
    """Total weight of the arcs leaving the X side."""
    cut = as_dicut(cut)
    cut.check(d)
    x = cut.x_side
    return sum((w for t, h, w in d.arcs if t in x and h not in x), Fraction(0))


@dataclass(frozen=True)
class BoundCertificate:
    algorithm: str
    guaranteed_weight: Fraction
    achieved_weight: Fraction
    params: Mapping[str, Fraction] = field(default_factory=dict)
    branch: str = ""

    @property
    def holds(self) -> bool:
        return self.achieved_weight >= self.guaranteed_weight


# -- instance text format ---------------------------------------------------

def format_instance(d: WeightedDigraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines.extend(f"{t} {h} {format_rational(w)}" for t, h, w in d.arcs)
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> WeightedDigraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty instance")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError(f"line {lineno}: expected 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: non-integer header") from exc
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} arcs, found {len(body)}")
    arcs = []
    for lineno, parts in body:
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'tail head weight'")
        try:
            t, h = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer endpoint") from exc
        arcs.append((t, h, to_rational(parts[2])))
    return make_digraph(n, arcs)


def read_instance(path: Union[str, Path]) -> WeightedDigraph:
    return parse_instance(Path(path).read_text())


def write_instance(d: WeightedDigraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_instance(d))
