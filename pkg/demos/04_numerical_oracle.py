"""
Brute-force check by truncated nested sums
==========================================

The nested sum defining zeta(i_1, ..., i_k) is truncated at L and 2L and
extrapolated linearly in 1/L, then compared with the exact values.
"""

from evenzeta import e_sum_numeric, e_sum_theorem1, mzv_numeric
from evenzeta.oracle import euler_double_checks

L = 100_000
for n, k in [(2, 2), (3, 2), (4, 3), (5, 5)]:
    est = e_sum_numeric(n, k, L)
    exact = e_sum_theorem1(n, k).value.to_float()
    print(f"E({2 * n},{k}): numeric={est.value:.15f} exact={exact:.15f} rel={abs(est.value - exact) / exact:.1e}")

# without extrapolation the 1/L tail is visible
plain = mzv_numeric((2, 2), L, extrapolate=False)
extrap = mzv_numeric((2, 2), L)
print("zeta(2,2) plain:", plain.value, "extrapolated:", extrap.value, "hint:", extrap.error_hint)

# Euler's alternating and plain double-zeta sums
for line in euler_double_checks(4, L).checked:
    print(line["identity"], f"rel={line['rel_error']:.1e}")
