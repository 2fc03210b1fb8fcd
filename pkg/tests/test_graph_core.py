from fractions import Fraction

import pytest
from hypothesis import given, settings

from dicut.graph_core import (
    Arc,
    BoundCertificate,
    Dicut,
    NegativeWeightError,
    ParseError,
    SelfLoopError,
    VertexRangeError,
    WeightedDigraph,
    dicut_weight,
    format_instance,
    format_rational,
    make_digraph,
    parse_instance,
    read_instance,
    to_rational,
    write_instance,
)

from strategies import digraphs


def test_to_rational_accepts_exact_inputs():
    assert to_rational(3) == 3
    assert to_rational("2/6") == Fraction(1, 3)
    assert to_rational("0.25") == Fraction(1, 4)
    assert to_rational(Fraction(5, 7)) == Fraction(5, 7)


@pytest.mark.parametrize("bad", [0.5, True])
def test_to_rational_rejects_floats_and_bools(bad):
    with pytest.raises(TypeError):
        to_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


def test_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        make_digraph(2, [(1, 1, 1)])


def test_rejects_negative_weight():
    with pytest.raises(NegativeWeightError):
        make_digraph(2, [(0, 1, -1)])


def test_rejects_out_of_range_endpoint():
    with pytest.raises(VertexRangeError):
        make_digraph(2, [(0, 2, 1)])


def test_parallel_and_zero_weight_arcs_are_kept():
    d = make_digraph(2, [(0, 1, 1), (0, 1, 2), (1, 0, 0)])
    assert d.m == 3
    assert d.total_weight() == 3


def test_dicut_weight_single_arc():
    d = make_digraph(2, [(0, 1, 3)])
    assert dicut_weight(d, {0}) == 3
    assert dicut_weight(d, {1}) == 0
    assert dicut_weight(d, Dicut()) == 0


def test_dicut_weight_rejects_foreign_vertex():
    with pytest.raises(VertexRangeError):
        dicut_weight(make_digraph(2, [(0, 1, 1)]), {5})


def test_dicut_mask_roundtrip():
    cut = Dicut(frozenset({0, 3, 4}))
    assert cut.mask == 0b11001
    assert Dicut.from_mask(cut.mask) == cut
    assert cut.complement(5) == Dicut(frozenset({1, 2}))


def test_induced_relabels():
    d = make_digraph(4, [(0, 2, 1), (2, 3, 2), (1, 0, 5)])
    sub, old = d.induced([2, 3, 0])
    assert old == [0, 2, 3]
    assert sorted(sub.arcs) == [Arc(0, 1, Fraction(1)), Arc(1, 2, Fraction(2))]


def test_certificate_holds():
    assert BoundCertificate("x", Fraction(1), Fraction(1)).holds
    assert not BoundCertificate("x", Fraction(2), Fraction(1)).holds


def test_parse_skips_comments_and_blank_lines():
    d = parse_instance("# header\n3 2\n\n0 1 1/2\n1 2 3\n")
    assert d.n == 3 and d.arcs[0].weight == Fraction(1, 2)


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 1\n", "2 2\n0 1 1\n", "2 1\n0 1 x\n", "2 1\n0 1 1\n1 0 1\n"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_file_roundtrip(tmp_path):
    d = make_digraph(3, [(0, 1, "1/3"), (2, 1, 4)])
    path = tmp_path / "g.txt"
    write_instance(d, path)
    assert read_instance(path) == d


@given(digraphs())
@settings(max_examples=200)
def test_format_parse_roundtrip(d):
    text = format_instance(d)
    back = parse_instance(text)
    assert back == d
    assert format_instance(back) == text


@given(digraphs())
def test_cut_and_complement_partition_crossing_weight(d):
    cut = Dicut(frozenset(range(0, d.n, 2)))
    crossing = sum((w for t, h, w in d.arcs if (t % 2 == 0) != (h % 2 == 0)), Fraction(0))
    assert dicut_weight(d, cut) + dicut_weight(d, cut.complement(d.n)) == crossing


def test_empty_graph():
    d = WeightedDigraph(0)
    assert d.m == 0 and d.total_weight() == 0
    assert format_instance(d) == "0 0\n"
