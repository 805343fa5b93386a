from fractions import Fraction
from math import factorial

import pytest

from evenzeta.closed_form import e_row_sum, e_sum_theorem1
from evenzeta.exact_arith import PiValue, zeta_even, zt_of_h
from evenzeta.series import (
    GradedSeries1,
    PqPolynomial,
    cot_series,
    f_expand,
    g_k_series,
    pq_polynomials,
    sinc_series,
    verify_gfun,
    verify_pq_recurrence,
)


def cos_series(N):
    return GradedSeries1([Fraction((-1) ** j, factorial(2 * j)) for j in range(N + 1)])


def test_sinc_coefficients():
    assert sinc_series(0).coeffs == (1,)
    assert sinc_series(2).coeffs == (1, Fraction(-1, 6), Fraction(1, 120))


def test_reciprocal_identity():
    s = sinc_series(30)
    one = s * s.reciprocal()
    assert one.coeffs == (1,) + (0,) * 30


def test_reciprocal_requires_unit():
    with pytest.raises(ZeroDivisionError):
        GradedSeries1([0, 1]).reciprocal()


def test_csc_matches_h_images():
    csc = sinc_series(20).reciprocal()
    for n in range(21):
        assert csc.value_at(n) == zt_of_h(n)


def test_cot_series_examples():
    c = cot_series(4)
    assert c[0] == 1 and c[1] == Fraction(-1, 3) and c[2] == Fraction(-1, 45)


def test_cot_series_against_cos_over_sinc():
    # pi sqrt t cot(pi sqrt t) = cos(pi sqrt t) / sinc(pi sqrt t), no zeta values involved
    N = 25
    assert cot_series(N) == cos_series(N) * sinc_series(N).reciprocal()


def test_mismatched_orders_truncate():
    a, b = sinc_series(5), sinc_series(3)
    assert (a + b).order == 3 and (a * b).order == 3


def test_f_expand_examples():
    F = f_expand(12, 12)
    assert F[0, 0] == 1
    assert F[2, 2] == Fraction(1, 120)
    assert F[3, 2] == Fraction(1, 1260) == Fraction(3, 4) * zeta_even(3).coeff(3)
    for n in range(1, 13):
        assert F[n, 0] == 0
        for k in range(n + 1, 13):
            assert F[n, k] == 0


def test_f_expand_rejects_bad_orders():
    with pytest.raises(ValueError):
        f_expand(3, 4)


def test_f_expand_matches_closed_form():
    N = 25
    F = f_expand(N, N)
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            assert F.value_at(n, k) == e_sum_theorem1(n, k).value


def test_f_at_s_equal_one_gives_row_sums():
    N = 25
    F = f_expand(N, N)
    for n in range(1, N + 1):
        assert PiValue.monomial(F.row_at_s1(n), n) == e_row_sum(n)


def test_g_k_examples():
    assert g_k_series(0, 10).coeffs == (1,) + (0,) * 10
    g1 = g_k_series(1, 10)
    assert g1[2] == Fraction(1, 90)
    for n in range(1, 11):
        assert g1.value_at(n) == zeta_even(n)


def test_g_k_rows_of_f():
    N = 14
    F = f_expand(N, N)
    for k in range(N + 1):
        g = g_k_series(k, N)
        for n in range(N + 1):
            assert g[n] == F[n, k]
            if n < k:
                assert g[n] == 0


def test_g_k_needs_order():
    with pytest.raises(ValueError):
        g_k_series(5, 3)


def test_pq_examples():
    p0, q0 = pq_polynomials(0)
    assert p0.coeffs == () and q0.coeffs == (1,)
    p1, q1 = pq_polynomials(1)
    assert p1.coeffs == (Fraction(-1, 2),) and q1.coeffs == (Fraction(1, 2),)
    p2, q2 = pq_polynomials(2)
    assert p2.coeffs == (Fraction(-3, 8),)
    # the recurrence forces 2 Q_2 = (3/2) Q_1 + (x/2) P_1 = 3/4 - x/4
    assert q2.coeffs == (Fraction(3, 8), Fraction(-1, 8))


def test_pq_degrees():
    for k in range(20):
        p, q = pq_polynomials(k)
        assert p.degree <= (k - 1) // 2
        assert q.degree <= k // 2


def test_pq_recurrence():
    assert verify_pq_recurrence(1)
    assert verify_pq_recurrence(12)


def test_pq_recurrence_negative_control():
    def perturbed(k):
        p, q = pq_polynomials(k)
        if k == 4:
            q = PqPolynomial("Q", 4, (q.coeffs[0] + Fraction(1, 1000),) + q.coeffs[1:])
        return p, q

    report = verify_pq_recurrence(12, pq=perturbed)
    assert not report
    bad = {(f["k"], f["check"]) for f in report.failures}
    assert (3, "Q") in bad  # Q_4 on the left
    assert all(k in (3, 4) for k, _ in bad)
    assert any(f["delta"] for f in report.failures)


@pytest.mark.parametrize("k, N", [(0, 8), (1, 8), (5, 12)])
def test_gfun_examples(k, N):
    assert verify_gfun(k, N)


def test_gfun_all_k():
    for k in range(13):
        assert verify_gfun(k, 12)


def test_low_degree_cancellation():
    # G_k minus its closed form in the "1 - cot" normalization leaves only a polynomial of degree < k
    N = 16
    cot = cot_series(N)
    half_one_minus_cot = (GradedSeries1([1] + [0] * N) - cot).scale(Fraction(1, 2))
    for k in range(1, 13):
        p, q = pq_polynomials(k)
        g = g_k_series(k, N)
        poly = GradedSeries1.from_polynomial([-2 * c for c in p.coeffs], N)
        expr = half_one_minus_cot * poly
        diff = g - expr
        assert all(diff[n] == 0 for n in range(k, N + 1))
        assert all(g[n] == expr[n] for n in range(k, N + 1))
