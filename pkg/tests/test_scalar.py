import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from maxclass.scalar import (CharacteristicMismatch, Scalar, binom_lucas, binom_mod,
                             is_power_of_p, reduce_raw)

PRIMES = [2, 3, 5, 7]


def pascal_mod(rows: int, p: int):
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [(prev[k - 1] + prev[k]) % p for k in range(1, len(prev))] + [1])
    return tri


@pytest.mark.parametrize("p", PRIMES)
def test_lucas_matches_pascal_triangle(p):
    tri = pascal_mod(50, p)
    for a in range(51):
        for b in range(a + 1):
            assert binom_lucas(a, b, p) == tri[a][b]


def test_binom_examples():
    assert binom_lucas(6, 3, 3) == 2
    assert binom_lucas(4, 2, 5) == 1
    assert binom_lucas(11, 0, 7) == 1
    assert binom_lucas(3, 5, 3) == 0


@pytest.mark.parametrize("p", PRIMES)
def test_lucas_matches_factorials(p):
    for a in range(41):
        for b in range(41):
            expected = math.factorial(a) // (math.factorial(b) * math.factorial(a - b)) if b <= a else 0
            assert binom_mod(a, b, p) == expected % p


def test_binom_rejects_composite():
    with pytest.raises(ValueError):
        binom_lucas(4, 2, 4)


def test_is_power_of_p():
    assert is_power_of_p(27, 3).exponent == 3
    assert is_power_of_p(27, 3).value == 27
    assert is_power_of_p(18, 3) is None
    assert is_power_of_p(1, 5).exponent == 0
    with pytest.raises(ValueError):
        is_power_of_p(0, 3)


def test_serialisation():
    assert str(Scalar(3, 5)) == "2"
    assert str(Scalar(0, Fraction(18, 20))) == "9/10"
    assert Scalar.parse("9/10", 0) == Fraction(9, 10)
    assert Scalar.parse("-1", 5) == 4
    # 1/2 in GF(5) is 3
    assert Scalar.parse("1/2", 5) == 3


def test_rationals_normalised():
    s = Scalar(0, Fraction(-4, -6))
    assert s.value.numerator == 2 and s.value.denominator == 3


def test_mixing_characteristics_is_an_error():
    with pytest.raises(CharacteristicMismatch):
        Scalar(3, 1) + Scalar(5, 1)
    with pytest.raises(CharacteristicMismatch):
        Scalar(0, 1) * Scalar(3, 1)


def test_non_invertible_denominator():
    with pytest.raises(ZeroDivisionError):
        reduce_raw(Fraction(1, 5), 5)
    with pytest.raises(ZeroDivisionError):
        Scalar(7, 0).inverse()


prime = st.sampled_from(PRIMES)


@given(prime, st.integers(), st.integers(), st.integers())
def test_field_axioms_mod_p(p, a, b, c):
    x, y, z = Scalar(p, a), Scalar(p, b), Scalar(p, c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y
    assert 0 <= x.value < p


fractions_ = st.fractions(max_denominator=10**6)


@given(fractions_, fractions_, fractions_)
def test_field_axioms_rationals(a, b, c):
    x, y, z = Scalar(0, a), Scalar(0, b), Scalar(0, c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if x:
        assert x * x.inverse() == 1
    assert x.value.denominator > 0


@given(prime, st.integers(0, 200), st.integers(0, 200))
def test_lucas_against_comb(p, a, b):
    assert binom_lucas(a, b, p) == math.comb(a, b) % p
