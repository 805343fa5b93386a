"""One entry point per computation route for ``E(2n, k)`` and table generation."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .closed_form import e_row_sum, e_sum_theorem1, e_sum_theorem3
from .exact_arith import PiValue
from .oracle import DEFAULT_LIMIT, OracleEstimate, e_sum_numeric
from .series import f_expand
from .symfunc import DEFAULT_WEIGHT_CAP, n_nk, zt

EXACT_METHODS = ("theorem1", "theorem3", "series", "symfunc")
METHODS = EXACT_METHODS + ("oracle",)


def e_exact(n: int, k: int, method: str = "theorem1") -> PiValue:
    """``E(2n, k)`` as an exact :class:`PiValue` by the named route.

    ``k > n`` gives zero, the table convention; closed-form routes themselves
    reject that range.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
    if method not in EXACT_METHODS:
        raise ValueError(f"unknown exact method {method!r}; choose from {', '.join(EXACT_METHODS)}")
    if k > n:
        return PiValue()
    if method == "theorem1":
        return e_sum_theorem1(n, k).value
    if method == "theorem3":
        return e_sum_theorem3(n, k).value
    if method == "series":
        return f_expand(n, k).value_at(n, k)
    if n > DEFAULT_WEIGHT_CAP:
        raise ValueError(f"symfunc route supports n <= {DEFAULT_WEIGHT_CAP}, got {n}")
    return zt(n_nk(n, k))


def e_numeric(n: int, k: int, L: int = DEFAULT_LIMIT, extrapolate: bool | None = None) -> OracleEstimate:
    return e_sum_numeric(n, k, L, extrapolate)


def e_table(n_max: int, method: str = "theorem1") -> Iterator[tuple[int, int, PiValue]]:
    """Yield ``(n, k, E(2n,k))`` for ``1 <= k <= n <= n_max`` in ``(n, k)`` order.

    After the last ``k`` of each row, ``(n, 0, row_sum)`` is yielded with the
    closed-form row sum.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    grid = f_expand(n_max, n_max) if method == "series" else None
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            if grid is not None:
                yield n, k, grid.value_at(n, k)
            else:
                yield n, k, e_exact(n, k, method)
        yield n, 0, e_row_sum(n)


def coefficient_of(value: PiValue, n: int) -> Fraction:
    if value.is_zero():
        return Fraction(0)
    j, c = value.leading()
    if j != n:
        raise ValueError(f"{value} is not a multiple of pi^{2 * n}")
    return c
