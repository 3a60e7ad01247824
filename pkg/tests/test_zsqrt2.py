import pytest
from hypothesis import given, strategies as st

from pell_lab.sequences import DomainError, term
from pell_lab.zsqrt2 import (
    LAMBDA, LAMBDA_BAR, ONE, SQRT2, ZERO, Zsqrt2, binet_ar_check, binet_b_check, binet_check,
    binet_pell_lucas_check, binet_sum_check, conj, mul, power,
)

big = st.integers(min_value=-10**100, max_value=10**100)
elems = st.builds(Zsqrt2, big, big)


def test_examples():
    assert LAMBDA * LAMBDA == Zsqrt2(3, 2)
    assert ONE * Zsqrt2(7, -4) == Zsqrt2(7, -4)
    assert LAMBDA * LAMBDA_BAR == Zsqrt2(-1, 0)
    assert power(LAMBDA, 1) == LAMBDA
    assert power(LAMBDA, 0) == ONE
    assert power(LAMBDA, 4) == Zsqrt2(17, 12)
    assert conj(LAMBDA) == LAMBDA_BAR
    assert conj(Zsqrt2(5)) == Zsqrt2(5)
    assert conj(Zsqrt2(3, 2)) == Zsqrt2(3, -2)
    assert SQRT2 * SQRT2 == Zsqrt2(2)
    assert str(Zsqrt2(3, 2)) == "3+2√2"


def test_power_errors():
    with pytest.raises(DomainError):
        power(LAMBDA, -1)


@given(elems, elems, elems)
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + ZERO == x and x * ONE == x
    assert x - x == ZERO


@given(elems, elems)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert conj(mul(x, y)) == conj(x) * conj(y)


@given(elems, st.integers(min_value=0, max_value=30))
def test_power_matches_repeated_product(x, n):
    acc = ONE
    for _ in range(n):
        acc = acc * x
    assert power(x, n) == acc == x ** n


def test_binet_examples():
    assert binet_check(1) and binet_check(2)
    with pytest.raises(DomainError):
        binet_check(0)


def test_binet_ranges():
    for n in range(1, 501):
        assert binet_check(n)
        assert binet_sum_check(n)
        assert binet_pell_lucas_check(n)
        assert binet_b_check(n)
    for n in range(0, 501):
        assert binet_ar_check(n)


def test_lambda_powers_have_unit_norm():
    for n in range(0, 60):
        p = power(LAMBDA, n)
        assert p.norm() == (-1) ** n
        if n:
            assert p == Zsqrt2(term("Q", n - 1), term("E", n))
