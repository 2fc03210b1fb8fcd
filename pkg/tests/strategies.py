from fractions import Fraction

from hypothesis import strategies as st
from hypothesis.strategies import composite

from dicut.graph_core import Arc, WeightedDigraph

weights = st.fractions(min_value=0, max_value=6, max_denominator=4)
heavy_weights = st.fractions(min_value=1, max_value=6, max_denominator=4)


@composite
def digraphs(draw, max_n=8, max_m=20, weight=weights, min_n=0):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return WeightedDigraph(n, ())
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    arcs = draw(st.lists(st.tuples(pairs, weight), max_size=max_m))
    return WeightedDigraph(n, tuple(Arc(t, h, w) for (t, h), w in arcs))


@composite
def dags(draw, max_n=9, max_m=24, weight=heavy_weights):
    """Acyclic: arcs go forward along a drawn permutation."""
    n = draw(st.integers(0, max_n))
    if n < 2:
        return WeightedDigraph(n, ())
    order = draw(st.permutations(range(n)))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] < p[1])
    arcs = draw(st.lists(st.tuples(pairs, weight), max_size=max_m))
    return WeightedDigraph(n, tuple(Arc(order[i], order[j], w) for (i, j), w in arcs))


rationals = st.fractions(min_value=0, max_value=Fraction(10**6), max_denominator=1000)
