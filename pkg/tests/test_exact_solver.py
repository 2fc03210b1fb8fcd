from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicut.exact_solver import (
    InstanceTooLargeError,
    max_cut_exact,
    max_dicut_bruteforce,
    max_dicut_exact,
    min_dicut_exact,
)
from dicut.generators import appendix_extremal, random_digraph, regular_tournament
from dicut.graph_core import dicut_weight, make_digraph
from dicut.measures import r_plus, underlying_graph

from strategies import digraphs


def test_single_arc():
    d = make_digraph(2, [(0, 1, 5)])
    cut, mac = max_dicut_exact(d)
    assert mac == 5 and cut.sorted() == [0]


def test_empty_digraph():
    assert max_dicut_exact(make_digraph(0))[1] == 0
    assert max_dicut_bruteforce(make_digraph(3))[1] == 0


def test_triangle():
    d = make_digraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    assert max_dicut_exact(d)[1] == 1
    assert max_cut_exact(underlying_graph(d)) == 2


@pytest.mark.parametrize("k,expected", [(1, 1), (2, 3), (3, 6)])
def test_regular_tournaments(k, expected):
    assert max_dicut_exact(regular_tournament(k))[1] == expected


def test_k5_undirected():
    assert max_cut_exact(underlying_graph(regular_tournament(2))) == 6


def test_single_edge_undirected():
    assert max_cut_exact(make_digraph(2, [(0, 1, 5)])) == 5


def test_appendix_seven():
    d = appendix_extremal(7)
    assert max_dicut_bruteforce(d)[1] == Fraction(3, 8) * d.total_weight()


def test_tie_break_smallest_mask():
    # {0} and {1} both cut weight 1; {0} has the smaller mask
    cut, mac = max_dicut_exact(make_digraph(2, [(0, 1, 1), (1, 0, 1)]))
    assert mac == 1 and cut.sorted() == [0]


def test_min_dicut_excludes_trivial_sides():
    d = make_digraph(2, [(0, 1, 1), (1, 0, 2)])
    cut, value = min_dicut_exact(d)
    assert value == 1 and cut.sorted() == [0]
    with pytest.raises(ValueError):
        min_dicut_exact(make_digraph(1))


def test_size_cap():
    with pytest.raises(InstanceTooLargeError):
        max_dicut_exact(make_digraph(27))
    with pytest.raises(InstanceTooLargeError):
        max_dicut_exact(make_digraph(6), max_n=5)
    with pytest.raises(InstanceTooLargeError):
        max_dicut_bruteforce(make_digraph(21))


@pytest.mark.parametrize("seed", range(500))
def test_gray_code_agrees_with_brute_force(seed):
    d = random_digraph(1 + seed % 12, Fraction(1 + seed % 3, 4), (0, 5), seed, 1 + seed % 3)
    cut, mac = max_dicut_exact(d)
    assert max_dicut_bruteforce(d)[1] == mac
    assert dicut_weight(d, cut) == mac


def _undirected_bruteforce(g):
    best = Fraction(0)
    for sides in product((0, 1), repeat=g.n):
        best = max(best, sum((w for t, h, w in g.arcs if sides[t] != sides[h]), Fraction(0)))
    return best


@given(digraphs(max_n=7))
@settings(max_examples=100)
def test_max_cut_matches_enumeration(d):
    assert max_cut_exact(d) == _undirected_bruteforce(d)


@given(digraphs(max_n=8), st.fractions(min_value=0, max_value=5, max_denominator=6))
@settings(max_examples=100)
def test_scaling(d, c):
    cut, mac = max_dicut_exact(d)
    cut_c, mac_c = max_dicut_exact(d.scaled(c))
    assert mac_c == c * mac
    if c > 0:
        assert cut_c == cut


@given(digraphs(max_n=8))
@settings(max_examples=150)
def test_sandwich_inequalities(d):
    mac = max_dicut_exact(d)[1]
    mac_g = max_cut_exact(underlying_graph(d))
    rp = r_plus(d)
    assert mac_g / 2 <= mac <= (mac_g + rp) / 2
    assert (mac_g / 2 + rp) / 2 <= mac
    assert rp <= mac
    if d.n >= 2:
        assert rp + min_dicut_exact(d)[1] <= mac
