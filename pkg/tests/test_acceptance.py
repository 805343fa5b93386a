"""Exit criteria; each test appends one PASS/FAIL line to the terminal summary."""

import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from evenzeta import suites
from evenzeta.closed_form import (
    e_row_sum,
    e_sum_theorem1,
    e_sum_theorem3,
    gessel_viennot_sides,
    theorem1_coefficients,
)
from evenzeta.exact_arith import PiValue, zeta_even, zt_of_e
from evenzeta.series import f_expand


def record(label, ok, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
    return ok


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


# zeta-product coefficients as printed for depths 3..6
PRINTED = {
    3: {0: Fraction(5, 8), 1: Fraction(-1, 4)},
    4: {0: Fraction(35, 64), 1: Fraction(-5, 16)},
    5: {0: Fraction(63, 128), 1: Fraction(-21, 64), 2: Fraction(3, 64)},
    6: {0: Fraction(231, 512), 1: Fraction(-21, 64), 2: Fraction(21, 256)},
}


def test_1_cross_route_exactness():
    def run():
        grid = f_expand(40, 40)
        bad = []
        for n in range(1, 41):
            for k in range(1, n + 1):
                t1, t3 = e_sum_theorem1(n, k).value, e_sum_theorem3(n, k).value
                if not t1 == t3 == grid.value_at(n, k):
                    bad.append((n, k))
        return bad

    bad, elapsed = timed(run)
    fixtures_ok = all(theorem1_coefficients(k) == c for k, c in PRINTED.items())
    for k, coeffs in PRINTED.items():
        for n in range(k, 41):
            want = PiValue()
            for j, a in coeffs.items():
                want = want + (zeta_even(n) if j == 0 else zeta_even(j) * zeta_even(n - j)).scale(a)
            fixtures_ok = fixtures_ok and e_sum_theorem1(n, k).value == want
    ok = not bad and fixtures_ok and elapsed < 10
    record("1 cross-route exactness (n<=40)", ok,
           f"820 cells, mismatches={len(bad)}, printed fixtures={'ok' if fixtures_ok else 'BAD'}, {elapsed:.2f}s < 10s")
    assert ok


def test_2_base_case():
    bad = [k for k in range(1, 41) if e_sum_theorem3(k, k).value != zt_of_e(k) or e_sum_theorem1(k, k).value != zt_of_e(k)]
    ok = not bad
    record("2 E(2k,k) = pi^2k/(2k+1)! (k<=40)", ok, f"mismatches={bad}")
    assert ok


def test_3_row_sums():
    bad = []
    for n in range(1, 41):
        total = PiValue()
        for k in range(1, n + 1):
            total = total + e_sum_theorem1(n, k).value
        if total != e_row_sum(n):
            bad.append(n)
    n2 = e_row_sum(2) == PiValue.monomial(Fraction(7, 360), 2)
    ok = not bad and n2
    record("3 row sums (n<=40)", ok, f"mismatches={bad}, n=2 gives 7/360*pi^4: {n2}")
    assert ok


def test_4_bernoulli_identities():
    def run():
        return suites.bernoulli_identity(40), suites.gessel_viennot(40)

    (thm4, gv), elapsed = timed(run)
    zero_band = all(gessel_viennot_sides(n, k)[1] == 0 for n in range(1, 40) for k in range(n + 1, min(2 * n, 41)))
    ok = thm4.ok and gv.ok and zero_band and elapsed < 5
    record("4 Bernoulli identity k<=n<=40 and complementary range n<k<=40", ok,
           f"{len(thm4.checked)} + {len(gv.checked)} instances, RHS=0 for n<k<2n: {zero_band}, {elapsed:.2f}s < 5s")
    assert ok


def test_5_symmetric_function_suite():
    def run():
        return [
            suites.infprod(10, 12),
            suites.sfi(10, 12),
            suites.nexp(10, 12),
            suites.newton(10, 12),
            suites.symfunc_zt(10, 12),
        ]

    reports, elapsed = timed(run)
    ok = all(r.ok for r in reports) and elapsed < 60
    record("5 symmetric-function suite (weight<=10, cap 12)", ok,
           ", ".join(r.summary() for r in reports) + f", {elapsed:.2f}s < 60s")
    assert ok


def test_6_gk_machinery():
    pq = suites.pq_recurrence(12)
    gf = suites.gfun(12)
    ok = pq.ok and gf.ok
    record("6 P_k/Q_k recurrence (k<=12), G_k closed form and coefficients (order 12)", ok,
           f"{pq.summary()}; {gf.summary()}")
    assert ok


def test_7_oracle_agreement():
    rep, elapsed = timed(suites.oracle, 5, 100_000, None)
    e_rows = [c for c in rep.checked if c.get("check") == "e-sum"]
    z22 = next(c for c in rep.checked if c.get("check") == "zeta(2,2)")
    worst = max(c["rel_error"] for c in e_rows)
    ok = all(c["passed"] for c in e_rows) and z22["passed"] and elapsed < 30
    record("7 oracle vs exact (k<=n<=5, L=1e5, extrapolated)", ok,
           f"worst rel={worst:.2e} <= 1e-5, zeta(2,2) rel={z22['rel_error']:.2e} <= 1e-6, {elapsed:.2f}s < 30s")
    assert ok


def test_8_euler_double_zeta():
    rep = suites.euler_double((6, 8), 100_000)
    main = [c for c in rep.checked if c["identity"] in ("alternating", "plain")]
    worst = max(c["rel_error"] for c in main)
    ok = all(c["passed"] for c in main) and worst <= 1e-6
    record("8 Euler double-zeta sums at 2n in {6, 8}", ok, f"worst rel={worst:.2e} <= 1e-6")
    assert ok


def test_9_monomial_regrouping():
    rep = suites.monomial_regrouping(4, 100_000)
    worst = max(c["abs_error"] for c in rep.checked)
    ok = rep.ok
    record("9 symmetrized monomial sums regroup to E(2n,k) (weight<=4)", ok, f"worst abs={worst:.2e} <= 1e-8")
    assert ok
