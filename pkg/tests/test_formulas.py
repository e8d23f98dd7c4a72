from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from mtasep.formulas import (
    binom,
    binomial_identity_sides,
    chained_sorted_bracket,
    compositions,
    inhom_partition_value,
    inhom_sorted_probability,
    inhom_sorted_value,
    parse_params,
    scaled_bracket_prediction,
    sorted_bracket_formula,
)
from mtasep.mlq import bracket, partition_function
from mtasep.words import sorted_word, strict_types


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(-1, 0) == 0
    assert binom(3, -1) == 0
    assert binom(3, 4) == 0


@pytest.mark.parametrize("m,expected", [((1, 1, 1, 1), 9), ((1, 1, 2), 3), ((5,), 1), ((1, 1, 1, 1, 1), 96), ((2, 3), 1)])
def test_sorted_bracket_formula(m, expected):
    assert sorted_bracket_formula(m) == expected


def test_sorted_bracket_formula_matches_enumeration_for_five_letters():
    assert bracket(sorted_word((1, 1, 1, 1, 1))) == 96


def test_sorted_bracket_formula_exhaustive():
    for n in range(1, 7):
        for m in strict_types(n):
            assert sorted_bracket_formula(m) == bracket(sorted_word(m)) == chained_sorted_bracket(m)


def test_binomial_identity_examples():
    assert binomial_identity_sides(4, 1, 2) == (4, 4)
    for n in range(1, 8):
        for s in range(n):
            assert binomial_identity_sides(n, 0, s) == (1, 1)
    assert binomial_identity_sides(12, 5, 3) == (792, 792)


def test_binomial_identity_exhaustive():
    for n in range(1, 15):
        for s in range(n):
            for b in range(n - s):
                lhs, rhs = binomial_identity_sides(n, b, s)
                assert lhs == rhs


@given(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40))
def test_binomial_identity_random(s, b, extra):
    n = s + b + 1 + extra
    lhs, rhs = binomial_identity_sides(n, b, s)
    assert lhs == rhs == comb(n, b)


def test_scaled_bracket_prediction():
    # [1234] = C(3,1) [1233]
    assert scaled_bracket_prediction(3, 2, 1) == 9 == bracket((1, 2, 3, 4))
    assert scaled_bracket_prediction(7, 4, 0) == 7
    # [1233] = C(3,1) [1222] in the r = 3 picture with u = 1
    assert scaled_bracket_prediction(1, 1, 2) == 3 == bracket((1, 2, 3, 3))
    assert bracket((1, 2, 2, 2)) == 1


def test_compositions():
    assert set(compositions(1, 2)) == {(1, 0), (0, 1)}
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert len(list(compositions(3, 2))) == 4
    with pytest.raises(ValueError):
        list(compositions(2, 0))
    assert list(compositions(0, 0)) == [()]


@given(st.integers(0, 7), st.integers(1, 4))
def test_compositions_match_brute_force(total, parts):
    got = list(compositions(total, parts))
    brute = [t for t in product(range(total + 1), repeat=parts) if sum(t) == total]
    assert len(got) == len(set(got)) == comb(total + parts - 1, parts - 1)
    assert set(got) == set(brute)


def test_inhom_hand_values():
    assert inhom_sorted_value((1, 1), (1, 1)) == 1
    assert inhom_partition_value((1, 1), (1, 1)) == 2
    assert inhom_sorted_value((1, 1, 1), (1, 1, 1)) == 2 == sorted_bracket_formula((1, 1, 1))
    assert inhom_partition_value((1, 1, 1), (1, 1, 1)) == 9


def test_inhom_hand_expansion_generic_point():
    # m = (1,1,1): sorted = v1^2 (v1 + v2), Z = 3 v1^2 (v1 + 2 v2)
    v = (Fraction(2), Fraction(3), Fraction(5))
    sorted_hand = v[0] ** 2 * (v[0] + v[1])
    z_hand = (3 * v[0] ** 2) * (v[0] + 2 * v[1])
    assert inhom_sorted_value((1, 1, 1), v) == sorted_hand
    assert inhom_partition_value((1, 1, 1), v) == z_hand


def test_inhom_reduces_at_ones():
    for n in range(1, 7):
        for m in strict_types(n):
            ones = (1,) * len(m)
            assert inhom_sorted_value(m, ones) == sorted_bracket_formula(m)
            assert inhom_partition_value(m, ones) == partition_function(m)


def test_inhom_probability_at_unit_rates():
    assert inhom_sorted_probability((1, 1, 1, 1), (1, 1, 1)) == Fraction(9, 96)


def test_parse_params():
    assert parse_params("1/2,1,3") == (Fraction(1, 2), Fraction(1), Fraction(3))
    with pytest.raises(ValueError):
        parse_params("1,0")
    with pytest.raises(ValueError):
        inhom_sorted_value((1, 1), (1, -1))
