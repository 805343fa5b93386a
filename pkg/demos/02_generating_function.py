"""
The generating function in two variables
========================================

Expanding sin(pi sqrt((1-s)t)) / (sqrt(1-s) sin(pi sqrt t)) as a power series
in t and s gives E(2n,k) / pi^(2n) as the coefficient of t^n s^k.
"""

from evenzeta import e_sum_theorem1, f_expand, g_k_series, pq_polynomials
from evenzeta.series import cot_series, verify_gfun

N = 8
F = f_expand(N, N)

# a triangle of rationals: row n, column k
for n in range(1, N + 1):
    print(f"n={n}:", "  ".join(str(F[n, k]) for k in range(1, n + 1)))

# every cell agrees with the closed form
print("matches closed form:", all(F.value_at(n, k) == e_sum_theorem1(n, k).value
                                   for n in range(1, N + 1) for k in range(1, n + 1)))

# the s^k column is G_k(t); it is a polynomial combination of pi sqrt t cot(pi sqrt t)
k = 4
P, Q = pq_polynomials(k)
print(f"P_{k} coefficients:", [str(c) for c in P.coeffs])
print(f"Q_{k} coefficients:", [str(c) for c in Q.coeffs])
print("pi sqrt t cot(pi sqrt t):", [str(c) for c in cot_series(5).coeffs])
print(f"G_{k} = P_{k} cot + Q_{k} to order 12:", verify_gfun(k, 12).ok)
print(f"G_{k} coefficients:", [str(c) for c in g_k_series(k, N).coeffs])
