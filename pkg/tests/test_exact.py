from fractions import Fraction

import pytest

from coxcat.exact import NumberField, number_field


def test_small_orders_are_rational():
    for k in (1, 2, 3):
        with pytest.raises(AssertionError):
            NumberField(k)


def test_golden_ratio_identity():
    K = number_field(5)
    y = K.generator
    assert y * y == y + K.one
    assert (y * y) / y == y
    assert 2 * y == y + y


def test_generator_sign_is_exact():
    y = number_field(5).generator
    # 2cos(pi/5) = 1.6180339...
    assert Fraction(8, 5) < y < Fraction(17, 10)
    assert Fraction(16180, 10001) < y
    assert not (y < Fraction(16180, 10001))


def test_heptagon_minpoly():
    K = number_field(7)
    y = K.generator
    assert y * y * y == y * y + 2 * y - K.one
    assert K.degree == 3


def test_two_cos_needs_divisor():
    K = number_field(10)
    assert K.two_cos(2) == K.zero
    t = K.two_cos(5)
    assert t * t == t + K.one
    with pytest.raises(AssertionError):
        K.two_cos(3)


def test_interval_refines():
    K = NumberField(5)
    lo0, hi0 = K.interval
    K.refine()
    lo1, hi1 = K.interval
    assert lo0 <= lo1 < hi1 <= hi0
    assert hi1 - lo1 < hi0 - lo0


def test_field_cache():
    assert number_field(5) is number_field(5)
