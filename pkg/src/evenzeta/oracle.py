"""Floating-point brute force for multiple zeta values.

Truncated nested sums are evaluated with a prefix-sum recursion that costs
``O(k L)`` for depth ``k`` and bound ``L``.  The truncation tail of a sum with
outer exponent 2 decays like ``c/L``; by default it is cancelled by a two-point
extrapolation ``2 S(2L) - S(L)``.  The ``c/L`` error model is a working
assumption, not a proved bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb, prod, factorial
from typing import Sequence

import numpy as np

from .exact_arith import zeta_even
from .report import Report

__all__ = [
    "DEFAULT_LIMIT",
    "MzvArgs",
    "OracleEstimate",
    "e_sum_numeric",
    "euler_double_checks",
    "even_compositions",
    "iso_order",
    "mzv_numeric",
    "zt_monomial_numeric",
]

DEFAULT_LIMIT = 100_000


@dataclass(frozen=True)
class MzvArgs:
    """Admissible argument tuple ``(i_1, ..., i_k)``: all ``i_j >= 1`` and ``i_1 >= 2``."""

    args: tuple[int, ...]

    def __post_init__(self):
        args = tuple(int(i) for i in self.args)
        object.__setattr__(self, "args", args)
        if not args:
            raise ValueError("MZV needs at least one argument")
        if any(i < 1 for i in args):
            raise ValueError(f"MZV arguments must be positive, got {args}")
        if args[0] < 2:
            raise ValueError(f"divergent MZV: outer argument must be >= 2, got {args}")

    @property
    def weight(self) -> int:
        return sum(self.args)

    @property
    def depth(self) -> int:
        return len(self.args)


@dataclass(frozen=True)
class OracleEstimate:
    value: float
    limit: int
    extrapolated: bool
    error_hint: float

    def __post_init__(self):
        if self.error_hint < 0:
            raise ValueError("error_hint must be non-negative")


class _TailTables:
    """Memo of exclusive prefix sums ``A(m) = sum_{n<m} T(n)`` keyed by argument tail.

    ``A(m)`` for the tail ``(i_j, ..., i_k)`` is the depth ``k-j+1`` MZV truncated
    to indices below ``m``; tails shared between argument tuples are computed once.
    """

    def __init__(self, L: int):
        self.L = L
        self.recip = 1.0 / np.arange(1, L + 1, dtype=np.float64)
        self._powers: dict[int, np.ndarray] = {}
        self._tables: dict[tuple[int, ...], np.ndarray] = {(): np.ones(L, dtype=np.float64)}

    def power(self, i: int) -> np.ndarray:
        if i not in self._powers:
            self._powers[i] = self.recip**i
        return self._powers[i]

    def terms(self, tail: tuple[int, ...]) -> np.ndarray:
        """``T(n) = n^(-i_j) * A_{tail[1:]}(n)`` for ``n = 1..L``."""
        return self.power(tail[0]) * self.prefix(tail[1:])

    def prefix(self, tail: tuple[int, ...]) -> np.ndarray:
        if tail not in self._tables:
            t = self.terms(tail)
            acc = np.empty_like(t)
            acc[0] = 0.0
            np.cumsum(t[:-1], out=acc[1:])
            self._tables[tail] = acc
        return self._tables[tail]

    def total(self, args: tuple[int, ...]) -> float:
        # ascending accumulation; all terms are positive
        return float(np.sum(self.terms(args)))


def _default_extrapolate(args: tuple[int, ...]) -> bool:
    return args[0] <= 2


def mzv_numeric(a: MzvArgs | Sequence[int], L: int = DEFAULT_LIMIT, extrapolate: bool | None = None) -> OracleEstimate:
    """Estimate ``zeta(i_1, ..., i_k)`` from nested sums truncated at ``L`` and ``2L``.

    With ``extrapolate`` the result is ``2 S(2L) - S(L)``, otherwise ``S(L)``
    itself.  ``None`` turns extrapolation on exactly when ``i_1 == 2``.
    ``error_hint`` is ``|S(2L) - S(L)|`` in both cases.
    """
    args = a if isinstance(a, MzvArgs) else MzvArgs(tuple(a))
    if L < args.depth:
        raise ValueError(f"limit {L} smaller than depth {args.depth}")
    return _sum_numeric([args.args], L, extrapolate)


def even_compositions(n: int, k: int) -> list[MzvArgs]:
    """All ``(2a_1, ..., 2a_k)`` with ``a_j >= 1`` and ``sum a_j = n``, lexicographically descending in ``a_1``."""
    if k < 1 or k > n:
        return []

    def rec(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining - slots + 1, 0, -1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    return [MzvArgs(tuple(2 * x for x in c)) for c in rec(n, k)]


def _sum_numeric(args_list: Sequence[tuple[int, ...]], L: int, extrapolate: bool | None) -> OracleEstimate:
    if extrapolate is None:
        extrapolate = any(_default_extrapolate(a) for a in args_list)
    t1, t2 = _TailTables(L), _TailTables(2 * L)
    s_l = sum(t1.total(a) for a in args_list)
    s_2l = sum(t2.total(a) for a in args_list)
    value = 2 * s_2l - s_l if extrapolate else s_l
    return OracleEstimate(value, L, extrapolate, abs(s_2l - s_l))


def e_sum_numeric(n: int, k: int, L: int = DEFAULT_LIMIT, extrapolate: bool | None = None) -> OracleEstimate:
    """Numerical ``E(2n, k)``: sum of ``zeta`` over all even compositions of ``2n`` into ``k`` parts.

    Prefix tables are shared between compositions with a common tail.
    """
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return _sum_numeric([c.args for c in even_compositions(n, k)], L, extrapolate)


def iso_order(parts: Sequence[int]) -> int:
    """Order of the stabilizer of ``parts`` in the symmetric group."""
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    return prod(factorial(c) for c in counts.values())


def zt_monomial_numeric(lam: Sequence[int], L: int = DEFAULT_LIMIT, extrapolate: bool | None = None) -> OracleEstimate:
    """Numerical image of ``m_lambda``: ``(1/|Iso|) sum_sigma zeta(2 lambda_sigma)``.

    Each distinct rearrangement occurs ``|Iso|`` times among the ``k!``
    permutations, so the normalized sum runs over distinct rearrangements once.
    """
    parts = tuple(int(p) for p in lam)
    if not parts or min(parts) < 1:
        raise ValueError(f"need a nonempty partition with positive parts, got {lam}")
    arrangements = sorted(set(permutations(parts)), reverse=True)
    return _sum_numeric([tuple(2 * p for p in arr) for arr in arrangements], L, extrapolate)


def euler_double_checks(n: int, L: int = DEFAULT_LIMIT, rel_tol: float = 1e-6,
                        extrapolate: bool | None = None) -> Report:
    """Numerical check of Euler's two depth-2 sums at weight ``2n``.

    ``sum_{i=2}^{2n-1} (-1)^i zeta(i, 2n-i) = zeta(2n)/2`` and
    ``sum_{i=2}^{2n-1} zeta(i, 2n-i) = zeta(2n)``.  Their half-sum, the
    even-even part, is compared with ``E(2n, 2)`` computed by
    :func:`e_sum_numeric` and with ``(3/4) zeta(2n)``.
    """
    if n < 2:
        raise ValueError(f"depth-2 sums need n >= 2, got {n}")
    w = 2 * n
    terms = {i: mzv_numeric((i, w - i), L, extrapolate) for i in range(2, w)}
    plain = sum(t.value for t in terms.values())
    alternating = sum((-1) ** i * t.value for i, t in terms.items())
    hint = sum(t.error_hint for t in terms.values())
    z = zeta_even(n).to_float()
    e2 = e_sum_numeric(n, 2, L, extrapolate)

    report = Report("euler-double")
    checks = (
        ("alternating", alternating, z / 2),
        ("plain", plain, z),
        ("even-part", (plain + alternating) / 2, 0.75 * z),
        ("even-part-vs-oracle", (plain + alternating) / 2, e2.value),
    )
    for name, got, want in checks:
        rel = abs(got - want) / abs(want)
        report.record(rel <= rel_tol, n=n, identity=name, lhs=repr(got), rhs=repr(want),
                      rel_error=rel, error_hint=hint, limit=L)
    return report


def composition_count(n: int, k: int) -> int:
    return comb(n - 1, k - 1) if 1 <= k <= n else 0
