"""
Symmetric functions behind the formulas
=======================================

N_{n,k} is the sum of the monomial symmetric functions m_lambda over
partitions of n with k parts.  Sending p_i to zeta(2i) turns it into E(2n,k).
"""

from evenzeta import SymPoly, n_nk, zt
from evenzeta.symfunc import basis_e, basis_h, basis_p, to_p_basis, verify_infprod, verify_nexp, verify_sfi

print("N_{4,2} =", n_nk(4, 2))
print("p_1^2   =", basis_p(1) * basis_p(1))
print("h_3     =", basis_h(3))

# change of basis to power sums, then the zeta map
print("e_3 in power sums:", {tuple(k): str(v) for k, v in to_p_basis(basis_e(3)).items()})
print("zt(e_3) =", zt(basis_e(3)))
print("zt(N_{5,2}) =", zt(n_nk(5, 2)))

# the three structural identities at weight 8
for check in (verify_infprod, verify_sfi, verify_nexp):
    print(check(8).summary())
