import math
from fractions import Fraction

import pytest

from ffperm.surd import Surd, sqrt_plus


def test_perfect_square_folds_into_rational():
    s = sqrt_plus(Fraction(225, 16), Fraction(5, 4))
    assert s.is_rational
    assert s == Fraction(5)


def test_m5_window_bound_value():
    # 3*5/2 - 39/16 = 81/16, sqrt = 9/4
    s = sqrt_plus(Fraction(81, 16), Fraction(5, 4))
    assert s == Fraction(7, 2)


def test_irrational_comparisons_are_exact():
    s = sqrt_plus(2, 0)  # sqrt(2)
    assert s > Fraction(14142135623, 10**10)
    assert s < Fraction(14142135624, 10**10)
    assert not s == Fraction(3, 2)


def test_negative_coefficient_side():
    s = Surd(Fraction(10), Fraction(-1), Fraction(2))  # 10 - sqrt(2)
    assert s < 10
    assert s > 8
    assert float(s) == pytest.approx(10 - math.sqrt(2))


def test_equal_radicand_difference():
    a = sqrt_plus(3, 1)       # 1 + sqrt(3)
    b = sqrt_plus(3, 0, 2)    # 2 sqrt(3)
    assert a < b
    assert b > a
    assert a != b
    assert sqrt_plus(3, 1) == sqrt_plus(3, 1)


def test_arithmetic_with_rationals():
    s = sqrt_plus(5, 0)
    t = s + Fraction(1, 2)
    assert t - Fraction(1, 2) == s
    assert (-s) < 0 < s
    assert 3 - s > 0


def test_negative_radicand_rejected():
    with pytest.raises(ValueError):
        Surd(Fraction(0), Fraction(1), Fraction(-1))


def test_float_matches_decimal_expansion():
    s = sqrt_plus(Fraction(33, 16), Fraction(5, 4))
    assert float(s) == pytest.approx(math.sqrt(33) / 4 + 1.25)


def test_ordering_dense_rational_grid():
    s = sqrt_plus(7, 2)  # 2 + sqrt(7) ~ 4.6457
    for k in range(1, 200):
        r = Fraction(k, 43)
        assert (s < r) == (float(s) < float(r)) or s == r
