from fractions import Fraction
from math import comb

import pytest

from evenzeta.closed_form import (
    EvenZetaSum,
    binom,
    e_row_sum,
    e_sum,
    e_sum_theorem1,
    e_sum_theorem3,
    gessel_viennot_sides,
    theorem1_coefficients,
    verify_bernoulli_identity,
    verify_gessel_viennot,
)
from evenzeta.exact_arith import PiValue, zeta_even, zt_of_e


def pi_mono(c, n):
    return PiValue.monomial(Fraction(c), n)


# Coefficients of zeta(2n), zeta(2)zeta(2n-2), zeta(4)zeta(2n-4) as printed for depths 2..6.
PRINTED = {
    2: {0: Fraction(3, 4)},
    3: {0: Fraction(5, 8), 1: Fraction(-1, 4)},
    4: {0: Fraction(35, 64), 1: Fraction(-5, 16)},
    5: {0: Fraction(63, 128), 1: Fraction(-21, 64), 2: Fraction(3, 64)},
    6: {0: Fraction(231, 512), 1: Fraction(-21, 64), 2: Fraction(21, 256)},
}


def from_zeta_products(n, coeffs):
    total = PiValue()
    for j, a in coeffs.items():
        term = zeta_even(n) if j == 0 else zeta_even(j) * zeta_even(n - j)
        total = total + term.scale(a)
    return total


def test_binom_edges():
    assert binom(2, 3) == 0 and binom(-1, 0) == 0 and binom(5, -1) == 0
    assert binom(40, 20) == comb(40, 20)


@pytest.mark.parametrize("k", sorted(PRINTED))
def test_printed_coefficients(k):
    assert theorem1_coefficients(k) == PRINTED[k]


@pytest.mark.parametrize("k", sorted(PRINTED))
def test_printed_formulas_match_both_routes(k):
    for n in range(k, k + 15):
        want = from_zeta_products(n, PRINTED[k])
        assert e_sum_theorem1(n, k).value == want
        assert e_sum_theorem3(n, k).value == want


def test_leading_coefficient_pattern():
    # 3/4, 3/4*5/6, 3/4*5/6*7/8
    running = Fraction(1)
    for k in range(2, 12):
        running *= Fraction(2 * k - 1, 2 * k)
        assert theorem1_coefficients(k)[0] == running


def test_bernoulli_and_pi_forms_agree():
    for k in range(1, 25):
        for n in range(k, k + 5):
            assert from_zeta_products(n, theorem1_coefficients(k)) == e_sum_theorem1(n, k).value


def test_theorem1_examples():
    assert e_sum_theorem1(2, 2).value == pi_mono(Fraction(1, 120), 2)
    assert e_sum_theorem1(3, 3).value == pi_mono(Fraction(1, 5040), 3)
    for n in range(1, 8):
        assert e_sum_theorem1(n, 1).value == zeta_even(n)


def test_theorem3_examples():
    assert e_sum_theorem3(1, 1).value == pi_mono(Fraction(1, 6), 1)
    assert e_sum_theorem3(4, 2).value == pi_mono(Fraction(1, 12600), 4) == e_sum_theorem1(4, 2).value
    for k in range(1, 41):
        assert e_sum_theorem3(k, k).value == zt_of_e(k)


@pytest.mark.parametrize("fn", [e_sum_theorem1, e_sum_theorem3])
@pytest.mark.parametrize("n, k", [(1, 2), (3, 0), (2, -1)])
def test_range_errors(fn, n, k):
    with pytest.raises(ValueError):
        fn(n, k)


def test_routes_agree_and_positive():
    for n in range(1, 41):
        for k in range(1, n + 1):
            a, b = e_sum_theorem1(n, k), e_sum_theorem3(n, k)
            assert a.value == b.value
            assert a.coefficient > 0


def test_row_sum():
    assert e_row_sum(1) == pi_mono(Fraction(1, 6), 1)
    assert e_row_sum(2) == pi_mono(Fraction(7, 360), 2)
    assert e_row_sum(3) == pi_mono(Fraction(31, 15120), 3)
    for n in range(2, 41):
        total = PiValue()
        for k in range(1, n + 1):
            total = total + e_sum_theorem1(n, k).value
        assert total == e_row_sum(n)


def test_even_zeta_sum_invariants():
    with pytest.raises(ValueError):
        EvenZetaSum(4, 3, pi_mono(1, 2))
    with pytest.raises(ValueError):
        EvenZetaSum(4, 1, pi_mono(-1, 2))
    with pytest.raises(ValueError):
        EvenZetaSum(5, 1, pi_mono(1, 2))
    with pytest.raises(ValueError):
        EvenZetaSum(4, 1, pi_mono(1, 1))


def test_e_sum_dispatch():
    assert e_sum(5, 3, "theorem3") == e_sum_theorem3(5, 3)
    with pytest.raises(ValueError):
        e_sum(5, 3, "nope")


@pytest.mark.parametrize("n, k", [(1, 1), (3, 2), (10, 7)])
def test_bernoulli_identity_examples(n, k):
    report = verify_bernoulli_identity(n, k)
    assert report
    if (n, k) == (1, 1):
        assert report.checked[0]["lhs"] == report.checked[0]["rhs"] == "1/2"


def test_bernoulli_identity_rejects_complement():
    with pytest.raises(ValueError):
        verify_bernoulli_identity(2, 3)


@pytest.mark.parametrize("n, k, side", [(1, 2, Fraction(3, 2)), (2, 3, Fraction(0)), (2, 4, Fraction(5, 2))])
def test_gessel_viennot_examples(n, k, side):
    assert gessel_viennot_sides(n, k) == (side, side)
    assert verify_gessel_viennot(n, k)


def test_gessel_viennot_zero_band():
    for n in range(1, 20):
        for k in range(n + 1, 2 * n):
            assert gessel_viennot_sides(n, k) == (0, 0)


def test_gessel_viennot_rejects_identity_range():
    with pytest.raises(ValueError):
        verify_gessel_viennot(3, 3)
