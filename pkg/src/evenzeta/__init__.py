"""Exact sums ``E(2n, k)`` of multiple zeta values with even arguments.

``E(2n, k)`` adds up every ``zeta(i_1, ..., i_k)`` whose arguments are even and
sum to ``2n``.  It is always a rational multiple of ``pi**(2n)``; the library
computes that rational by several independent exact routes and checks them
against a floating-point brute force.
"""

from .closed_form import (
    EvenZetaSum,
    e_row_sum,
    e_sum,
    e_sum_theorem1,
    e_sum_theorem3,
    theorem1_coefficients,
    verify_bernoulli_identity,
    verify_gessel_viennot,
)
from .exact_arith import PiValue, bernoulli, zeta_even, zt_of_e, zt_of_h
from .oracle import e_sum_numeric, mzv_numeric, zt_monomial_numeric
from .report import Report
from .routes import e_exact, e_table
from .series import f_expand, g_k_series, pq_polynomials
from .symfunc import Partition, SymPoly, n_nk, zt

__version__ = "0.1.0"

__all__ = [
    "EvenZetaSum",
    "Partition",
    "PiValue",
    "Report",
    "SymPoly",
    "bernoulli",
    "e_exact",
    "e_row_sum",
    "e_sum",
    "e_sum_numeric",
    "e_sum_theorem1",
    "e_sum_theorem3",
    "e_table",
    "f_expand",
    "g_k_series",
    "mzv_numeric",
    "n_nk",
    "pq_polynomials",
    "theorem1_coefficients",
    "verify_bernoulli_identity",
    "verify_gessel_viennot",
    "zeta_even",
    "zt",
    "zt_monomial_numeric",
    "zt_of_e",
    "zt_of_h",
]
