"""Named verification suites, each returning a :class:`Report`."""

from __future__ import annotations

from typing import Callable

from .closed_form import (
    e_row_sum,
    e_sum_theorem1,
    e_sum_theorem3,
    verify_bernoulli_identity,
    verify_gessel_viennot,
)
from .exact_arith import zt_of_e, zt_of_h
from .oracle import DEFAULT_LIMIT, e_sum_numeric, euler_double_checks, mzv_numeric, zt_monomial_numeric
from .report import Report
from .series import f_expand, g_k_series, verify_gfun, verify_pq_recurrence
from .symfunc import (
    DEFAULT_WEIGHT_CAP,
    basis_e,
    basis_h,
    n_nk,
    partitions,
    verify_infprod,
    verify_newton,
    verify_nexp,
    verify_sfi,
    zt,
)

EXACT_MAX = 40
GFUN_MAX = 12
SYMFUNC_MAX_WEIGHT = 10
ORACLE_MAX = 5
ORACLE_REL_TOL = 1e-5
ZETA22_REL_TOL = 1e-6
EULER_WEIGHTS = (6, 8)
EULER_REL_TOL = 1e-6
REGROUP_ABS_TOL = 1e-8
REGROUP_MAX_WEIGHT = 4


def cross_route(n_max: int = EXACT_MAX) -> Report:
    """theorem1 == theorem3 == series coefficient, base case and row sums, exactly."""
    report = Report("cross-route")
    grid = f_expand(n_max, n_max)
    for n in range(1, n_max + 1):
        row = None
        for k in range(1, n + 1):
            t1 = e_sum_theorem1(n, k).value
            t3 = e_sum_theorem3(n, k).value
            s = grid.value_at(n, k)
            report.record(t1 == t3 == s, n=n, k=k, check="routes", theorem1=str(t1), theorem3=str(t3), series=str(s))
            row = t1 if row is None else row + t1
        report.record(e_sum_theorem3(n, n).value == zt_of_e(n), n=n, k=n, check="base",
                      lhs=str(e_sum_theorem3(n, n).value), rhs=str(zt_of_e(n)))
        report.record(row == e_row_sum(n), n=n, check="row-sum", lhs=str(row), rhs=str(e_row_sum(n)))
    return report


def bernoulli_identity(n_max: int = EXACT_MAX) -> Report:
    report = Report("bernoulli-identity")
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            report.merge(verify_bernoulli_identity(n, k))
    return report


def gessel_viennot(k_max: int = EXACT_MAX) -> Report:
    """Complementary range ``1 <= n < k <= k_max``."""
    report = Report("gessel-viennot")
    for n in range(1, k_max):
        for k in range(n + 1, k_max + 1):
            report.merge(verify_gessel_viennot(n, k))
    return report


def pq_recurrence(k_max: int = GFUN_MAX) -> Report:
    return verify_pq_recurrence(k_max)


def gfun(k_max: int = GFUN_MAX) -> Report:
    """``G_k = P_k cot + Q_k`` to order ``k_max`` and ``[t^n] G_k == E(2n,k)`` for ``k <= n <= k_max``."""
    report = Report("gfun")
    for k in range(k_max + 1):
        report.merge(verify_gfun(k, k_max))
        g = g_k_series(k, k_max)
        for n in range(k, k_max + 1) if k else ():
            want = e_sum_theorem1(n, k).value
            report.record(g.value_at(n) == want, k=k, n=n, check="coefficient", lhs=str(g.value_at(n)), rhs=str(want))
    return report


def infprod(max_weight: int = SYMFUNC_MAX_WEIGHT, cap: int = DEFAULT_WEIGHT_CAP) -> Report:
    return verify_infprod(max_weight, cap)


def sfi(max_weight: int = SYMFUNC_MAX_WEIGHT, cap: int = DEFAULT_WEIGHT_CAP) -> Report:
    return verify_sfi(max_weight, cap)


def nexp(max_weight: int = SYMFUNC_MAX_WEIGHT, cap: int = DEFAULT_WEIGHT_CAP) -> Report:
    return verify_nexp(max_weight, cap)


def newton(max_weight: int = SYMFUNC_MAX_WEIGHT, cap: int = DEFAULT_WEIGHT_CAP) -> Report:
    return verify_newton(max_weight, cap)


def symfunc_zt(max_weight: int = SYMFUNC_MAX_WEIGHT, cap: int = DEFAULT_WEIGHT_CAP) -> Report:
    """``zt(N_{n,k}) == E(2n,k)`` and ``zt`` on the e/h bases."""
    report = Report("symfunc-zt")
    for i in range(max_weight + 1):
        ze, zh = zt(basis_e(i, cap)), zt(basis_h(i, cap))
        report.record(ze == zt_of_e(i), i=i, check="e", lhs=str(ze), rhs=str(zt_of_e(i)))
        report.record(zh == zt_of_h(i), i=i, check="h", lhs=str(zh), rhs=str(zt_of_h(i)))
    for n in range(1, max_weight + 1):
        for k in range(1, n + 1):
            got, want = zt(n_nk(n, k, cap)), e_sum_theorem1(n, k).value
            report.record(got == want, n=n, k=k, check="N_nk", lhs=str(got), rhs=str(want))
    return report


def oracle(n_max: int = ORACLE_MAX, L: int = DEFAULT_LIMIT, extrapolate: bool | None = None) -> Report:
    """Numeric ``E(2n,k)`` against exact floats, ``zeta(2,2)``, and monomial regrouping."""
    report = Report("oracle")
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            est = e_sum_numeric(n, k, L, extrapolate)
            exact = e_sum_theorem1(n, k).value.to_float()
            rel = abs(est.value - exact) / exact
            report.record(rel <= ORACLE_REL_TOL, n=n, k=k, check="e-sum", numeric=est.value, exact=exact,
                          rel_error=rel, error_hint=est.error_hint)
    z22 = mzv_numeric((2, 2), L, extrapolate)
    exact = zt_of_e(2).to_float()
    rel = abs(z22.value - exact) / exact
    report.record(rel <= ZETA22_REL_TOL, check="zeta(2,2)", numeric=z22.value, exact=exact, rel_error=rel)
    report.merge(monomial_regrouping(REGROUP_MAX_WEIGHT, L, extrapolate))
    return report


def monomial_regrouping(max_weight: int = REGROUP_MAX_WEIGHT, L: int = DEFAULT_LIMIT,
                        extrapolate: bool | None = None) -> Report:
    """Sum of numeric ``zt(m_lambda)`` over ``lambda |- n`` of length ``k`` equals numeric ``E(2n,k)``."""
    report = Report("zt-monomial")
    for n in range(1, max_weight + 1):
        for k in range(1, n + 1):
            # one extrapolation decision for both groupings
            extrap = True if extrapolate is None else extrapolate
            grouped = sum(zt_monomial_numeric(lam, L, extrap).value for lam in partitions(n, k))
            direct = e_sum_numeric(n, k, L, extrap).value
            err = abs(grouped - direct)
            report.record(err <= REGROUP_ABS_TOL, n=n, k=k, check="regroup", grouped=grouped, direct=direct, abs_error=err)
    return report


def euler_double(weights: tuple[int, ...] = EULER_WEIGHTS, L: int = DEFAULT_LIMIT,
                 extrapolate: bool | None = None) -> Report:
    report = Report("euler-double")
    for w in weights:
        report.merge(euler_double_checks(w // 2, L, EULER_REL_TOL, extrapolate))
    return report


SUITES: dict[str, Callable[..., Report]] = {
    "cross-route": cross_route,
    "bernoulli-identity": bernoulli_identity,
    "gessel-viennot": gessel_viennot,
    "gfun": gfun,
    "pq-recurrence": pq_recurrence,
    "infprod": infprod,
    "sfi": sfi,
    "nexp": nexp,
    "newton": newton,
    "symfunc-zt": symfunc_zt,
    "oracle": oracle,
    "euler-double": euler_double,
}
