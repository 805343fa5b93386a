"""Closed formulas for ``E(2n, k)``, the row sums, and two Bernoulli identities.

``E(2n, k)`` is the sum of all multiple zeta values whose ``k`` arguments are
even and add up to ``2n``.  Two independent closed forms are provided:

* :func:`e_sum_theorem1` -- a short sum of products ``pi**(2j) * zeta(2n-2j)``
  with ``floor((k-1)/2) + 1`` terms;
* :func:`e_sum_theorem3` -- a Bernoulli-number sum with ``n - k + 1`` terms.

Their agreement for all ``k <= n`` is equivalent to the Bernoulli identity in
:func:`verify_bernoulli_identity`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact_arith import PiValue, bernoulli, zeta_even
from .report import Report

__all__ = [
    "EvenZetaSum",
    "bernoulli_identity_sides",
    "binom",
    "e_row_sum",
    "e_sum",
    "e_sum_theorem1",
    "e_sum_theorem3",
    "gessel_viennot_sides",
    "theorem1_coefficients",
    "verify_bernoulli_identity",
    "verify_gessel_viennot",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class EvenZetaSum:
    """``E(weight, depth)`` as an exact single-term :class:`PiValue`."""

    weight: int
    depth: int
    value: PiValue

    def __post_init__(self):
        if self.weight <= 0 or self.weight % 2:
            raise ValueError(f"weight must be a positive even integer, got {self.weight}")
        if not 1 <= self.depth <= self.weight // 2:
            raise ValueError(f"depth {self.depth} outside 1..{self.weight // 2}")
        j, c = self.value.leading()
        if j != self.weight // 2 or c <= 0:
            raise ValueError(f"E({self.weight},{self.depth}) must be c*pi^{self.weight} with c > 0, got {self.value}")

    @property
    def n(self) -> int:
        return self.weight // 2

    @property
    def coefficient(self) -> Fraction:
        """Rational ``c`` with ``E = c * pi**weight``."""
        return self.value.coeff(self.n)

    def __str__(self) -> str:
        return str(self.value)


def _check_range(n: int, k: int) -> None:
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def e_sum_theorem1(n: int, k: int) -> EvenZetaSum:
    """``E(2n, k)`` as ``sum_j (-1)^j pi^(2j) zeta(2n-2j) C(2k-2j-1, k) / (2^(2k-2j-2) (2j+1)!)``.

    The sum runs over ``0 <= j <= (k-1)//2``.  This is the pi-power form of the
    zeta-product formula and needs no division by Bernoulli numbers.
    """
    _check_range(n, k)
    total = PiValue()
    for j in range((k - 1) // 2 + 1):
        c = Fraction((-1) ** j * binom(2 * k - 2 * j - 1, k), 2 ** (2 * k - 2 * j - 2) * factorial(2 * j + 1))
        total = total + PiValue.monomial(c, j) * zeta_even(n - j)
    return EvenZetaSum(2 * n, k, total)


def theorem1_coefficients(k: int) -> dict[int, Fraction]:
    """Coefficients ``a_j`` in ``E(2n,k) = a_0 zeta(2n) + sum_{j>=1} a_j zeta(2j) zeta(2n-2j)``.

    Uses the Bernoulli form: ``a_0 = C(2k-1,k) / 2^(2k-2)`` and
    ``a_j = -C(2k-2j-1,k) / (2^(2k-3) (2j+1) B_(2j))``.  Valid for every
    ``n >= k``.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out = {0: Fraction(binom(2 * k - 1, k), 2 ** (2 * k - 2))}
    for j in range(1, (k - 1) // 2 + 1):
        out[j] = -Fraction(binom(2 * k - 2 * j - 1, k)) / (
            Fraction(2) ** (2 * k - 3) * (2 * j + 1) * bernoulli(2 * j)
        )
    return out


def e_sum_theorem3(n: int, k: int) -> EvenZetaSum:
    """``E(2n, k)`` from the Bernoulli sum over ``0 <= i <= n-k``."""
    _check_range(n, k)
    acc = Fraction(0)
    for i in range(n - k + 1):
        acc += (
            binom(n - i, k)
            * binom(2 * n + 1, 2 * i)
            * 2
            * (Fraction(2) ** (2 * i - 1) - 1)
            * bernoulli(2 * i)
        )
    sign = -1 if (n - k - 1) % 2 else 1
    c = sign * acc / factorial(2 * n + 1)
    return EvenZetaSum(2 * n, k, PiValue.monomial(c, n))


_METHODS = {"theorem1": e_sum_theorem1, "theorem3": e_sum_theorem3}


def e_sum(n: int, k: int, method: str = "theorem1") -> EvenZetaSum:
    """Dispatch to one of the exact closed-form routes by name."""
    try:
        fn = _METHODS[method]
    except KeyError:
        raise ValueError(f"unknown closed-form method {method!r}") from None
    return fn(n, k)


def e_row_sum(n: int) -> PiValue:
    """``sum_{k=1}^{n} E(2n, k) = 2 (2^(2n-1) - 1) (-1)^(n-1) B_2n pi^(2n) / (2n)!``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    c = 2 * (2 ** (2 * n - 1) - 1) * (-1 if n % 2 == 0 else 1) * bernoulli(2 * n) / factorial(2 * n)
    return PiValue.monomial(c, n)


def _identity_lhs(n: int, k: int) -> Fraction:
    # C(2n+1, 2i+1) vanishes for i > n, so the sum stops there
    return sum(
        (
            binom(2 * k - 2 * i - 1, k) * binom(2 * n + 1, 2 * i + 1) * bernoulli(2 * n - 2 * i)
            for i in range(min((k - 1) // 2, n) + 1)
        ),
        Fraction(0),
    )


def bernoulli_identity_sides(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Bernoulli identity for ``k <= n``."""
    _check_range(n, k)
    rhs = sum(
        (
            binom(n - i, k) * binom(2 * n + 1, 2 * i) * (Fraction(2) ** (2 * i - 1) - 1) * bernoulli(2 * i)
            for i in range(n - k + 1)
        ),
        Fraction(0),
    )
    rhs *= (-1 if k % 2 else 1) * Fraction(2) ** (2 * k - 2 * n)
    return _identity_lhs(n, k), rhs


def verify_bernoulli_identity(n: int, k: int) -> Report:
    """Check the Bernoulli identity equivalent to ``theorem1 == theorem3`` at ``(n, k)``."""
    lhs, rhs = bernoulli_identity_sides(n, k)
    report = Report("bernoulli-identity")
    report.record(lhs == rhs, n=n, k=k, lhs=str(lhs), rhs=str(rhs))
    return report


def gessel_viennot_sides(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the complementary-range identity (``k > n``)."""
    if n < 1 or k <= n:
        raise ValueError(f"need k > n >= 1, got n={n}, k={k}")
    return _identity_lhs(n, k), Fraction(2 * n + 1, 2) * binom(2 * k - 2 * n, k)


def verify_gessel_viennot(n: int, k: int) -> Report:
    lhs, rhs = gessel_viennot_sides(n, k)
    report = Report("gessel-viennot")
    report.record(lhs == rhs, n=n, k=k, lhs=str(lhs), rhs=str(rhs))
    return report
