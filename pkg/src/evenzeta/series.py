"""Truncated graded power series and the ``E(2n,k)`` generating function.

A :class:`GradedSeries1` of order ``N`` stores rationals ``a_0..a_N`` standing
for ``sum_n a_n * pi**(2n) * t**n``.  Every function used here (``sin``,
``cot``, their quotients) is even in ``sqrt(t)``, so carrying ``pi**(2n)``
implicitly keeps all stored coefficients rational and no square roots ever
appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .closed_form import binom
from .exact_arith import PiValue, zeta_even
from .report import Report

__all__ = [
    "GradedSeries1",
    "GradedSeries2",
    "PqPolynomial",
    "cot_series",
    "f_expand",
    "g_k_series",
    "pq_polynomials",
    "sinc_series",
    "verify_gfun",
    "verify_pq_recurrence",
]


class GradedSeries1:
    """Truncated series ``sum_{n<=N} a_n pi^(2n) t^n`` over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n <= self.order else Fraction(0)

    def value_at(self, n: int) -> PiValue:
        """Coefficient of ``t^n`` with its ``pi^(2n)`` made explicit."""
        return PiValue.monomial(self[n], n)

    def truncate(self, order: int) -> GradedSeries1:
        return GradedSeries1(self.coeffs[: order + 1])

    def __add__(self, other: GradedSeries1) -> GradedSeries1:
        n = min(self.order, other.order)
        return GradedSeries1([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> GradedSeries1:
        return GradedSeries1([-c for c in self.coeffs])

    def __sub__(self, other: GradedSeries1) -> GradedSeries1:
        return self + (-other)

    def scale(self, c) -> GradedSeries1:
        c = Fraction(c)
        return GradedSeries1([c * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GradedSeries1):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return GradedSeries1([sum((a[i] * b[m - i] for i in range(m + 1)), Fraction(0)) for m in range(n + 1)])

    __rmul__ = __mul__

    def reciprocal(self) -> GradedSeries1:
        """Multiplicative inverse to the same order; needs ``a_0 != 0``."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv0 = 1 / a[0]
        out = [inv0]
        for m in range(1, self.order + 1):
            acc = sum((a[i] * out[m - i] for i in range(1, m + 1)), Fraction(0))
            out.append(-acc * inv0)
        return GradedSeries1(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSeries1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"GradedSeries1({[str(c) for c in self.coeffs]})"

    @classmethod
    def from_polynomial(cls, poly: Sequence, order: int) -> GradedSeries1:
        """Map ``x^j`` to the graded monomial ``pi^(2j) t^j``."""
        coeffs = [Fraction(0)] * (order + 1)
        for j, c in enumerate(poly):
            if j <= order:
                coeffs[j] = Fraction(c)
        return cls(coeffs)


@dataclass(frozen=True)
class GradedSeries2:
    """Truncated series ``sum a_(n,k) pi^(2n) t^n s^k``; absent keys are zero."""

    order: tuple[int, int]
    coeffs: dict

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def value_at(self, n: int, k: int) -> PiValue:
        return PiValue.monomial(self[n, k], n)

    def row_at_s1(self, n: int) -> Fraction:
        """Coefficient of ``t^n`` after setting ``s = 1`` (sum over ``k``)."""
        return sum((c for (m, _), c in self.coeffs.items() if m == n), Fraction(0))


def sinc_series(N: int) -> GradedSeries1:
    """``sin(pi sqrt t) / (pi sqrt t)``: ``a_j = (-1)^j / (2j+1)!``."""
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    return GradedSeries1([Fraction((-1) ** j, factorial(2 * j + 1)) for j in range(N + 1)])


def cot_series(N: int) -> GradedSeries1:
    """``pi sqrt t * cot(pi sqrt t) = 1 - 2 sum_i zeta(2i) t^i``."""
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    return GradedSeries1([Fraction(1)] + [-2 * zeta_even(i).coeff(i) for i in range(1, N + 1)])


def f_expand(N_t: int, N_s: int) -> GradedSeries2:
    """Expand ``sin(pi sqrt((1-s)t)) / (sqrt(1-s) sin(pi sqrt t))`` to ``t^N_t s^N_s``.

    The numerator ``sum_j (-1)^j pi^(2j) t^j (1-s)^j / (2j+1)!`` is expanded
    with exact binomials and multiplied by the reciprocal of the sinc series.
    Coefficient ``(n, k)`` is ``E(2n,k) / pi^(2n)`` for ``n, k >= 1``.
    """
    if N_s > N_t:
        raise ValueError(f"s-order {N_s} exceeds t-order {N_t}")
    csc = sinc_series(N_t).reciprocal().coeffs
    # numerator coefficient of t^j s^k
    num = {
        (j, k): Fraction((-1) ** (j + k) * binom(j, k), factorial(2 * j + 1))
        for j in range(N_t + 1)
        for k in range(min(j, N_s) + 1)
    }
    out: dict[tuple[int, int], Fraction] = {}
    for n in range(N_t + 1):
        for k in range(min(n, N_s) + 1):
            c = sum((csc[n - j] * num[j, k] for j in range(k, n + 1)), Fraction(0))
            if c:
                out[n, k] = c
    return GradedSeries2((N_t, N_s), out)


def g_k_series(k: int, N: int) -> GradedSeries1:
    """Coefficient of ``s^k`` in the generating function, as a series in ``t``.

    The ``k``-th derivative of the sinc series scaled by ``(-t)^k / k!`` is the
    coefficient map ``a_j -> (-1)^k C(j, k) a_j``; the result is multiplied by
    the reciprocal sinc series.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if N < k:
        raise ValueError(f"order {N} below k={k}")
    sinc = sinc_series(N)
    sign = -1 if k % 2 else 1
    shifted = GradedSeries1([sign * binom(j, k) * a for j, a in enumerate(sinc.coeffs)])
    return sinc.reciprocal() * shifted


# ---------------------------------------------------------------------------
# P_k and Q_k


@dataclass(frozen=True)
class PqPolynomial:
    """Rational polynomial ``sum_j coeffs[j] x^j`` tagged as ``P_k`` or ``Q_k``."""

    kind: str
    index: int
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return max((j for j, c in enumerate(self.coeffs) if c), default=-1)


def _trim(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(*polys: Sequence[Fraction]) -> tuple[Fraction, ...]:
    size = max((len(p) for p in polys), default=0)
    return _trim([sum((p[i] for p in polys if i < len(p)), Fraction(0)) for i in range(size)])


def _pscale(c, p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return _trim([c * a for a in p])


def _x_times_derivative(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return _trim([j * a for j, a in enumerate(p)])


def _x_times(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return _trim([Fraction(0)] + list(p)) if p else ()


def pq_polynomials(k: int) -> tuple[PqPolynomial, PqPolynomial]:
    """Closed forms of ``P_k`` and ``Q_k``.

    ``P_k(x) = -sum_j (-4x)^j C(2k-2j-1, k) / (2^(2k-1) (2j+1)!)`` for
    ``j <= (k-1)//2`` and ``Q_k(x) = sum_j (-4x)^j C(2k-2j, k) / (2^(2k) (2j)!)``
    for ``j <= k//2``.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    p = [
        -Fraction((-4) ** j * binom(2 * k - 2 * j - 1, k)) / (Fraction(2) ** (2 * k - 1) * factorial(2 * j + 1))
        for j in range((k - 1) // 2 + 1)
    ] if k else []
    q = [
        Fraction((-4) ** j * binom(2 * k - 2 * j, k)) / (Fraction(2) ** (2 * k) * factorial(2 * j))
        for j in range(k // 2 + 1)
    ]
    return PqPolynomial("P", k, _trim(p)), PqPolynomial("Q", k, _trim(q))


PqProvider = Callable[[int], tuple[PqPolynomial, PqPolynomial]]


def verify_pq_recurrence(k_max: int, pq: PqProvider = pq_polynomials) -> Report:
    """Check that the closed forms obey the defining recurrence for ``k < k_max``.

    ``(k+1) P_{k+1} = k P_k - x P_k' - Q_k / 2`` and
    ``(k+1) Q_{k+1} = (2k+1)/2 Q_k - x Q_k' + x P_k / 2``, starting from
    ``P_0 = 0``, ``Q_0 = 1``.  ``pq`` may be swapped out for negative controls.
    """
    report = Report("pq-recurrence")
    p0, q0 = pq(0)
    report.record(p0.coeffs == () and q0.coeffs == (1,), k=0, check="initial", P=str(p0.coeffs), Q=str(q0.coeffs))
    for k in range(k_max):
        (p, q), (p1, q1) = pq(k), pq(k + 1)
        lhs_p = _pscale(k + 1, p1.coeffs)
        rhs_p = _padd(_pscale(k, p.coeffs), _pscale(-1, _x_times_derivative(p.coeffs)), _pscale(Fraction(-1, 2), q.coeffs))
        lhs_q = _pscale(k + 1, q1.coeffs)
        rhs_q = _padd(
            _pscale(Fraction(2 * k + 1, 2), q.coeffs),
            _pscale(-1, _x_times_derivative(q.coeffs)),
            _pscale(Fraction(1, 2), _x_times(p.coeffs)),
        )
        for name, lhs, rhs in (("P", lhs_p, rhs_p), ("Q", lhs_q, rhs_q)):
            delta = _padd(lhs, _pscale(-1, rhs))
            report.record(not delta, k=k, check=name, delta=[str(c) for c in delta])
    return report


def verify_gfun(k: int, N: int) -> Report:
    """Check ``G_k = P_k(x) * (pi sqrt t cot pi sqrt t) + Q_k(x)`` to order ``N``."""
    p, q = pq_polynomials(k)
    lhs = g_k_series(k, N)
    rhs = GradedSeries1.from_polynomial(p.coeffs, N) * cot_series(N) + GradedSeries1.from_polynomial(q.coeffs, N)
    report = Report("gfun")
    for n in range(N + 1):
        report.record(lhs[n] == rhs[n], k=k, n=n, lhs=str(lhs[n]), rhs=str(rhs[n]))
    return report
