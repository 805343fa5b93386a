"""Symmetric functions of bounded weight in the monomial basis.

A :class:`SymPoly` is a finite rational combination of monomial symmetric
functions ``m_lambda``.  Products are exact in infinitely many variables: an
identity between symmetric functions of weight at most ``M`` holds iff it holds
in ``M`` variables, so each product is computed in finitely many variables and
re-collected by partition.

The map :func:`zt` sends ``p_i`` to ``zeta(2i)`` (equivalently ``x_i`` to
``1/i^2``); it turns ``N_{n,k}``, the sum of ``m_lambda`` over partitions of
``n`` with ``k`` parts, into ``E(2n, k)``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .closed_form import binom
from .exact_arith import PiValue, zeta_even
from .linalg import solve_fraction_free
from .report import Report

__all__ = [
    "DEFAULT_WEIGHT_CAP",
    "Partition",
    "SymPoly",
    "basis_e",
    "basis_h",
    "basis_p",
    "monomial_mul",
    "n_nk",
    "partitions",
    "to_p_basis",
    "verify_infprod",
    "verify_newton",
    "verify_nexp",
    "verify_sfi",
    "zt",
]

DEFAULT_WEIGHT_CAP = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Parts given in any order are sorted; ``Partition()`` is the empty
    partition of weight 0.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, length: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally of fixed length."""
    if n < 0:
        return
    for p in _partitions(n, n):
        if length is None or len(p) == length:
            yield Partition(p)


@lru_cache(maxsize=None)
def _monomial_product(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """``m_lam * m_mu`` as ``((nu, coeff), ...)``.

    Works in ``M = len(lam) + len(mu)`` variables, enough for every ``nu`` in
    the product.  The coefficient of ``m_nu`` is the number of pairs of
    exponent vectors ``(alpha, beta)``, ``alpha`` a rearrangement of ``lam``
    and ``beta`` of ``mu`` (zero-padded to ``M``), with ``alpha + beta = nu``
    sorted decreasingly; only such pairs are enumerated.
    """
    M = len(lam) + len(mu)
    left = Counter(lam)
    left[0] = M - len(lam)
    right = Counter(mu)
    right[0] = M - len(mu)
    out: Counter = Counter()
    parts: list[int] = []

    def place(bound: int, nz_left: int, nz_right: int) -> None:
        if not nz_left and not nz_right:
            out[tuple(parts)] += 1
            return
        for a in [v for v, c in left.items() if c]:
            for b in [v for v, c in right.items() if c]:
                s = a + b
                if s == 0 or s > bound:
                    continue
                left[a] -= 1
                right[b] -= 1
                parts.append(s)
                place(s, nz_left - (a > 0), nz_right - (b > 0))
                parts.pop()
                left[a] += 1
                right[b] += 1

    place(sum(lam) + sum(mu), len(lam), len(mu))
    return tuple(out.items())


class SymPoly:
    """Symmetric function ``sum c_lambda m_lambda`` truncated above ``weight_cap``."""

    __slots__ = ("terms", "weight_cap")

    def __init__(self, terms: Mapping | None = None, weight_cap: int = DEFAULT_WEIGHT_CAP):
        self.weight_cap = weight_cap
        clean: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = Fraction(c)
            if c and lam.weight <= weight_cap:
                clean[lam] = clean.get(lam, 0) + c
        self.terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def monomial(cls, lam: Iterable[int], coeff=1, weight_cap: int = DEFAULT_WEIGHT_CAP) -> SymPoly:
        return cls({Partition(lam): coeff}, weight_cap)

    @classmethod
    def one(cls, weight_cap: int = DEFAULT_WEIGHT_CAP) -> SymPoly:
        return cls({Partition(): 1}, weight_cap)

    def weights(self) -> set[int]:
        return {lam.weight for lam in self.terms}

    def component(self, w: int) -> SymPoly:
        """Homogeneous component of weight ``w``."""
        return SymPoly({lam: c for lam, c in self.terms.items() if lam.weight == w}, self.weight_cap)

    def coeff(self, lam: Iterable[int]) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def _check(self, other: SymPoly) -> int:
        return min(self.weight_cap, other.weight_cap)

    def __add__(self, other: SymPoly) -> SymPoly:
        if not isinstance(other, SymPoly):
            return NotImplemented
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(out, self._check(other))

    def __neg__(self) -> SymPoly:
        return self.scale(-1)

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + (-other)

    def scale(self, c) -> SymPoly:
        c = Fraction(c)
        return SymPoly({lam: c * v for lam, v in self.terms.items()}, self.weight_cap)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return monomial_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "SymPoly(0)"
        body = " + ".join(f"{c}*m{tuple(lam)}" for lam, c in sorted(self.terms.items()))
        return f"SymPoly({body})"


def monomial_mul(a: SymPoly, b: SymPoly) -> SymPoly:
    """Exact product in the monomial basis, truncated at the smaller weight cap."""
    cap = min(a.weight_cap, b.weight_cap)
    out: dict[Partition, Fraction] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            if lam.weight + mu.weight > cap:
                continue
            for nu, mult in _monomial_product(tuple(lam), tuple(mu)):
                key = Partition(nu)
                out[key] = out.get(key, 0) + ca * cb * mult
    return SymPoly(out, cap)


def _check_index(i: int, weight_cap: int) -> None:
    if not 0 <= i <= weight_cap:
        raise ValueError(f"index {i} outside 0..{weight_cap}")


def basis_e(i: int, weight_cap: int = DEFAULT_WEIGHT_CAP) -> SymPoly:
    """Elementary ``e_i = m_(1^i)``."""
    _check_index(i, weight_cap)
    return SymPoly.monomial([1] * i, weight_cap=weight_cap)


def basis_h(i: int, weight_cap: int = DEFAULT_WEIGHT_CAP) -> SymPoly:
    """Complete homogeneous ``h_i``: every monomial of degree ``i``."""
    _check_index(i, weight_cap)
    return SymPoly({lam: 1 for lam in partitions(i)}, weight_cap)


def basis_p(i: int, weight_cap: int = DEFAULT_WEIGHT_CAP) -> SymPoly:
    """Power sum ``p_i = m_(i)``; ``p_0`` is taken as 1."""
    _check_index(i, weight_cap)
    return SymPoly.monomial([i] if i else [], weight_cap=weight_cap)


def n_nk(n: int, k: int, weight_cap: int = DEFAULT_WEIGHT_CAP) -> SymPoly:
    """``N_{n,k}``: sum of ``m_lambda`` over partitions of ``n`` with exactly ``k`` parts."""
    if n < 0 or k < 0 or n > weight_cap:
        raise ValueError(f"need 0 <= n <= {weight_cap} and k >= 0, got n={n}, k={k}")
    return SymPoly({lam: 1 for lam in partitions(n, k)}, weight_cap)


NnkProvider = Callable[[int, int, int], SymPoly]


def verify_infprod(N: int, weight_cap: int = DEFAULT_WEIGHT_CAP, nnk: NnkProvider = n_nk) -> Report:
    """Coefficient check of ``1 + sum N_{n,k} t^n s^k = E((s-1)t) H(t)``.

    The ``t^n s^k`` coefficient of the right side is
    ``sum_a C(a,k) (-1)^(a-k) e_a h_(n-a)``; compared for all ``k <= n <= N``.
    """
    _check_index(N, weight_cap)
    report = Report("infprod")
    e = [basis_e(a, weight_cap) for a in range(N + 1)]
    h = [basis_h(b, weight_cap) for b in range(N + 1)]
    for n in range(N + 1):
        products = [e[a] * h[n - a] for a in range(n + 1)]
        for k in range(n + 1):
            rhs = SymPoly(weight_cap=weight_cap)
            for a in range(k, n + 1):
                rhs = rhs + products[a].scale(binom(a, k) * (-1) ** (a - k))
            lhs = nnk(n, k, weight_cap)
            report.record(lhs == rhs, n=n, k=k, lhs=repr(lhs), rhs=repr(rhs))
    return report


def verify_sfi(N: int, weight_cap: int = DEFAULT_WEIGHT_CAP, nnk: NnkProvider = n_nk) -> Report:
    """Check ``sum_{i=1}^{n-k} p_i N_{n-i,k} = (n-k) N_{n,k} + (k+1) N_{n,k+1}`` for ``1 <= k < n <= N``.

    This is the ``t^n s^k`` coefficient of the first-order PDE satisfied by the
    symmetric-function generating series.
    """
    _check_index(N, weight_cap)
    report = Report("sfi")
    p = [basis_p(i, weight_cap) for i in range(N + 1)]
    for n in range(2, N + 1):
        for k in range(1, n):
            lhs = SymPoly(weight_cap=weight_cap)
            for i in range(1, n - k + 1):
                lhs = lhs + p[i] * nnk(n - i, k, weight_cap)
            rhs = nnk(n, k, weight_cap).scale(n - k) + nnk(n, k + 1, weight_cap).scale(k + 1)
            report.record(lhs == rhs, n=n, k=k, lhs=repr(lhs), rhs=repr(rhs))
    return report


def verify_nexp(N: int, weight_cap: int = DEFAULT_WEIGHT_CAP, nnk: NnkProvider = n_nk) -> Report:
    """Check ``N_{k+r,k} = sum_{i=0}^r (-1)^i C(k+i,i) h_(r-i) e_(k+i)`` for ``k >= 1``, ``k+r <= N``."""
    _check_index(N, weight_cap)
    report = Report("nexp")
    for k in range(1, N + 1):
        for r in range(N - k + 1):
            rhs = SymPoly(weight_cap=weight_cap)
            for i in range(r + 1):
                term = basis_h(r - i, weight_cap) * basis_e(k + i, weight_cap)
                rhs = rhs + term.scale((-1) ** i * binom(k + i, i))
            lhs = nnk(k + r, k, weight_cap)
            report.record(lhs == rhs, k=k, r=r, lhs=repr(lhs), rhs=repr(rhs))
    return report


def verify_newton(N: int, weight_cap: int = DEFAULT_WEIGHT_CAP) -> Report:
    """Check ``sum_{i=1}^r p_i h_(r-i) = r h_r`` for ``1 <= r <= N``."""
    _check_index(N, weight_cap)
    report = Report("newton")
    for r in range(1, N + 1):
        lhs = SymPoly(weight_cap=weight_cap)
        for i in range(1, r + 1):
            lhs = lhs + basis_p(i, weight_cap) * basis_h(r - i, weight_cap)
        rhs = basis_h(r, weight_cap).scale(r)
        report.record(lhs == rhs, r=r, lhs=repr(lhs), rhs=repr(rhs))
    return report


# ---------------------------------------------------------------------------
# power-sum basis and the zeta map


@lru_cache(maxsize=None)
def _p_to_m_matrix(w: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """Columns: ``p_lambda`` for ``lambda |- w`` expanded over rows ``m_mu``."""
    parts = tuple(partitions(w))
    index = {lam: i for i, lam in enumerate(parts)}
    cols = []
    for lam in parts:
        prod = SymPoly.one(w)
        for part in lam:
            prod = prod * basis_p(part, w)
        col = [0] * len(parts)
        for mu, c in prod.terms.items():
            col[index[mu]] = int(c)
        cols.append(col)
    rows = tuple(tuple(cols[j][i] for j in range(len(parts))) for i in range(len(parts)))
    return parts, rows


def to_p_basis(a: SymPoly) -> dict[Partition, Fraction]:
    """Coefficients ``c_lambda`` with ``a = sum c_lambda p_lambda``.

    Each homogeneous component is solved separately against the exact
    ``p -> m`` transition matrix of its weight.
    """
    out: dict[Partition, Fraction] = {}
    for w in sorted(a.weights()):
        if w > a.weight_cap:
            raise ValueError(f"weight {w} exceeds cap {a.weight_cap}")
        parts, matrix = _p_to_m_matrix(w)
        comp = a.component(w)
        sol = solve_fraction_free(matrix, [comp.coeff(mu) for mu in parts])
        out.update({lam: c for lam, c in zip(parts, sol) if c})
    return out


def zt(a: SymPoly) -> PiValue:
    """Image under ``p_i -> zeta(2i)``, extended multiplicatively and linearly."""
    total = PiValue()
    for lam, c in to_p_basis(a).items():
        term = PiValue.constant(c)
        for part in lam:
            term = term * zeta_even(part)
        total = total + term
    return total
