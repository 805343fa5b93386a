"""
Closed forms for sums of even multiple zeta values
==================================================

E(2n, k) adds up every zeta(i_1, ..., i_k) with even arguments summing to 2n.
It is always a rational multiple of pi^(2n).
"""

from fractions import Fraction

from evenzeta import PiValue, e_row_sum, e_sum_theorem1, e_sum_theorem3, theorem1_coefficients, zeta_even

# depth 1 is just zeta(2n), depth 2 is always three quarters of it
print("zeta(6)   =", zeta_even(3))
print("E(6,2)    =", e_sum_theorem1(3, 2))
print("3/4 zeta(6) =", zeta_even(3).scale(Fraction(3, 4)))

# the zeta-product form: E(2n,k) = a_0 zeta(2n) + a_1 zeta(2) zeta(2n-2) + ...
for k in range(2, 7):
    coeffs = theorem1_coefficients(k)
    print(f"k={k}:", ", ".join(f"a_{j}={c}" for j, c in coeffs.items()))

# the Bernoulli-sum route gives the same numbers
for n, k in [(5, 3), (10, 4), (20, 7)]:
    a, b = e_sum_theorem1(n, k), e_sum_theorem3(n, k)
    print(f"E({2 * n},{k}) = {a}   same by both routes: {a.value == b.value}")

# summing a row over depth gives a single Bernoulli number
row = sum((e_sum_theorem1(6, k).value for k in range(1, 7)), start=PiValue())
print("sum_k E(12,k) =", row, "=", e_row_sum(6))
print("as a float:", row.to_decimal_string(25))
