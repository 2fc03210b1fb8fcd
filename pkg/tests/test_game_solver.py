from fractions import Fraction
from itertools import combinations

import pytest

from dicut.exact_solver import max_dicut_exact
from dicut.game_solver import (
    GameRangeError,
    MalformedFamilyError,
    cnu,
    cnu_bounds_check,
    cnu_lower_bound,
    cnu_upper_bound,
    cover_family,
    family_coverage,
    maximal_cuts,
    verify_cover_family,
)
from dicut.generators import appendix_extremal
from dicut.graph_core import Dicut, make_digraph


def test_c2_is_one():
    sol = cnu(2)
    assert sol.value == 1
    assert sol.cut_distribution == ((Dicut(frozenset({0})), Fraction(1)),)


def test_c7_support_and_value():
    sol = cnu(7)
    assert sol.value == Fraction(3, 8)
    assert len(sol.cut_distribution) <= 8


def test_c9():
    assert cnu(9).value == Fraction(13, 37)


@pytest.mark.parametrize("nu", range(2, 9))
def test_solution_certificates(nu):
    sol = cnu(nu)
    sol.check()
    assert min(sol.coverage().values()) >= sol.value >= sol.best_response_value()


@pytest.mark.parametrize("nu", range(3, 9))
def test_value_times_weight_is_mac_of_extremal(nu):
    d = appendix_extremal(nu)
    assert cnu(nu).value * d.total_weight() == max_dicut_exact(d)[1]


@pytest.mark.parametrize("nu", range(2, 9))
def test_adversary_weights_realize_the_value(nu):
    # the adversary's weighting, as an instance, has mac exactly c_nu
    sol = cnu(nu)
    d = make_digraph(nu, [(i, j, w) for (i, j), w in sol.adversary_weights.items()])
    assert max_dicut_exact(d)[1] == sol.value


def _all_cut_rows(nu):
    arcs = list(combinations(range(nu), 2))
    return {sum(1 << k for k, (i, j) in enumerate(arcs) if (x >> i) & 1 and not (x >> j) & 1)
            for x in range(1 << nu)}


@pytest.mark.parametrize("nu", range(2, 8))
def test_maximal_cuts_dominate_every_cut(nu):
    kept = [m for _, m in maximal_cuts(nu)]
    for row in _all_cut_rows(nu):
        assert any(row | k == k for k in kept)
    assert all(not (a | b == b) for a in kept for b in kept if a != b)


def test_range():
    with pytest.raises(GameRangeError):
        cnu(1)
    with pytest.raises(GameRangeError):
        cnu(13)


@pytest.mark.parametrize("nu", range(3, 9))
def test_built_in_families(nu):
    family, t = cover_family(nu)
    assert verify_cover_family(nu, family, t, len(family))
    assert Fraction(t, len(family)) == cnu(nu).value


def test_family_with_cut_removed_fails():
    family, t = cover_family(5)
    smaller = family[1:]
    assert not verify_cover_family(5, smaller, t, len(smaller))
    # dropping C_1 leaves s3 s4 (ids 2, 3) covered only once
    assert family_coverage(5, smaller)[(2, 3)] == 1


def test_malformed_family():
    family, t = cover_family(5)
    with pytest.raises(MalformedFamilyError):
        verify_cover_family(5, family, t, 4)
    with pytest.raises(MalformedFamilyError):
        verify_cover_family(3, family, t, len(family))


def test_bounds_small_nu():
    assert cnu_bounds_check(2) == (Fraction(3, 8), None)
    assert cnu_lower_bound(11) <= Fraction(31, 92)


def test_upper_bound_nu12():
    upper = cnu_upper_bound(12)
    # 3 sqrt(12) - 10 is about 0.3923, so the bound is about 2.799
    assert Fraction(2799, 1000) < upper < Fraction(2800, 1000)


def test_upper_bound_is_rounded_up():
    for nu in (12, 50, 400):
        upper = cnu_upper_bound(nu)
        # upper - 1/4 = 1/(3s - 10) with s <= sqrt(nu), i.e. (10 + 1/(upper - 1/4))^2 <= 9 nu
        s3 = 10 + 1 / (upper - Fraction(1, 4))
        assert s3 * s3 <= 9 * nu


def test_lower_bound_large_nu_uses_block_bound():
    nu = 1000
    assert cnu_lower_bound(nu) > Fraction(1, 4) + Fraction(1, 4 * nu)
    assert cnu_lower_bound(nu) < cnu_upper_bound(nu)


def test_bounds_check_with_supplied_solution():
    lower, upper = cnu_bounds_check(8, cnu(8))
    assert lower <= Fraction(4, 11) and upper is None
    with pytest.raises(ValueError):
        cnu_bounds_check(7, cnu(8))


def test_monotone_up_to_nine():
    values = [cnu(nu).value for nu in range(2, 10)]
    assert all(a >= b for a, b in zip(values, values[1:]))
