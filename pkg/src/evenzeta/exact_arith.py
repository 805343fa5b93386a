"""Exact rationals, Bernoulli numbers, even zeta values and the ``PiValue`` type.

Every quantity handled by the library is a finite sum ``sum_j c_j * pi**(2*j)``
with rational ``c_j``.  :class:`PiValue` stores that sum sparsely, keyed by the
half-degree ``j``; odd powers of pi cannot be represented.
"""

from __future__ import annotations

import os
import re
import threading
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Union

__all__ = [
    "PI_STRING",
    "PiValue",
    "bernoulli",
    "bernoulli_table",
    "pi_digits",
    "zeta_even",
    "zt_of_e",
    "zt_of_h",
]

# 100 significant digits; the float path never needs more than ~60.
PI_STRING = (
    "3.141592653589793238462643383279502884197169399375105820974944592307816406286"
    "208998628034825342117068"
)

DEFAULT_PI_DIGITS = 40
MIN_PI_DIGITS = 30

Scalar = Union[int, Fraction]


def pi_digits() -> int:
    """Number of significant digits of pi used for float rendering.

    Read from ``EVENZETA_PI_DIGITS`` on every call, clamped to ``[30, 100]``.
    """
    raw = os.environ.get("EVENZETA_PI_DIGITS")
    if not raw:
        return DEFAULT_PI_DIGITS
    try:
        digits = int(raw)
    except ValueError:
        raise ValueError(f"EVENZETA_PI_DIGITS must be an integer, got {raw!r}") from None
    return max(MIN_PI_DIGITS, min(digits, len(PI_STRING) - 1))


def _pi_fraction(digits: int) -> Fraction:
    return Fraction(PI_STRING[: digits + 1])  # +1 for the decimal point


# ---------------------------------------------------------------------------
# Bernoulli numbers

_bernoulli_values: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def _extend_bernoulli(m: int) -> None:
    with _bernoulli_lock:
        values = _bernoulli_values
        for size in range(len(values), m + 1):
            # sum_{j=0}^{size} C(size+1, j) B_j = 0, solved for B_size
            if size >= 3 and size % 2:
                values.append(Fraction(0))
                continue
            acc = sum(comb(size + 1, j) * values[j] for j in range(size))
            values.append(-acc / (size + 1))


def bernoulli(m: int) -> Fraction:
    """Return the Bernoulli number ``B_m`` with the convention ``B_1 = -1/2``.

    Values are memoized in an append-only table; concurrent callers may read
    freely and fills are serialized.
    """
    if m < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {m}")
    if m >= len(_bernoulli_values):
        _extend_bernoulli(m)
    return _bernoulli_values[m]


def bernoulli_table(m: int) -> list[Fraction]:
    """Return ``[B_0, ..., B_m]``."""
    bernoulli(m)
    return _bernoulli_values[: m + 1]


# ---------------------------------------------------------------------------
# PiValue

_TERM_RE = re.compile(
    r"""^(?P<num>\d+)(?:/(?P<den>\d+))?   # rational coefficient
        (?:\s*\*\s*pi\^(?P<pow>\d+))?$    # optional pi power
    """,
    re.VERBOSE,
)


class PiValue:
    """Finite sum ``sum_j coeffs[j] * pi**(2j)`` with rational coefficients.

    Instances are immutable and canonical: zero coefficients are never stored,
    so equality and hashing are coefficient-wise.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        for j, c in (coeffs or {}).items():
            if j < 0:
                raise ValueError(f"negative pi half-degree {j}")
            c = Fraction(c)
            if c:
                clean[int(j)] = c
        self._coeffs = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, coeff: Scalar, j: int) -> PiValue:
        """``coeff * pi**(2j)``."""
        return cls({j: coeff})

    @classmethod
    def constant(cls, c: Scalar) -> PiValue:
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def coeff(self, j: int) -> Fraction:
        """Coefficient of ``pi**(2j)``."""
        return self._coeffs.get(j, Fraction(0))

    @property
    def degrees(self) -> list[int]:
        return list(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def leading(self) -> tuple[int, Fraction]:
        """``(j, c)`` of the single term of a monomial value."""
        if len(self._coeffs) != 1:
            raise ValueError(f"{self} is not a single pi-power term")
        (j, c), = self._coeffs.items()
        return j, c

    # arithmetic ------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> PiValue | None:
        if isinstance(other, PiValue):
            return other
        if isinstance(other, (int, Fraction)):
            return PiValue.constant(other)
        return None

    def __add__(self, other) -> PiValue:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for j, c in other._coeffs.items():
            out[j] = out.get(j, 0) + c
        return PiValue(out)

    __radd__ = __add__

    def __neg__(self) -> PiValue:
        return PiValue({j: -c for j, c in self._coeffs.items()})

    def __sub__(self, other) -> PiValue:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> PiValue:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> PiValue:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PiValue):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return PiValue(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> PiValue:
        c = Fraction(c)
        return PiValue({j: c * v for j, v in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    # rendering -------------------------------------------------------------

    def to_fraction(self, digits: int | None = None) -> Fraction:
        """Rational value obtained by substituting a truncated pi."""
        pi = _pi_fraction(digits or pi_digits())
        pi2 = pi * pi
        return sum((c * pi2**j for j, c in self._coeffs.items()), Fraction(0))

    def to_float(self) -> float:
        return float(self.to_fraction())

    def to_decimal_string(self, sig: int = 20) -> str:
        """Decimal rendering with ``sig`` significant digits."""
        value = self.to_fraction(max(pi_digits(), sig + 10))
        with localcontext() as ctx:
            ctx.prec = sig
            d = Decimal(value.numerator) / Decimal(value.denominator)
        return format(d, "g") if d else "0"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for idx, (j, c) in enumerate(self._coeffs.items()):
            mag = abs(c)
            body = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if j:
                body += f"*pi^{2 * j}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"PiValue({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> PiValue:
        """Inverse of ``str``: parse ``"5/8*pi^6 - 1/4*pi^2"`` style strings."""
        s = text.strip()
        if s == "0":
            return cls()
        tokens = re.split(r"\s+([+-])\s+", s)
        sign = 1
        if tokens[0].startswith("-"):
            sign, tokens[0] = -1, tokens[0][1:]
        signs = [sign] + [1 if t == "+" else -1 for t in tokens[1::2]]
        out: dict[int, Fraction] = {}
        for sgn, term in zip(signs, tokens[0::2]):
            m = _TERM_RE.match(term.strip())
            if m is None:
                raise ValueError(f"cannot parse PiValue term {term!r} in {text!r}")
            coeff = Fraction(int(m["num"]), int(m["den"] or 1))
            power = int(m["pow"] or 0)
            if power % 2:
                raise ValueError(f"odd power of pi in {text!r}")
            out[power // 2] = out.get(power // 2, 0) + sgn * coeff
        return cls(out)


def pi_sum(values: Iterable[PiValue]) -> PiValue:
    total = PiValue()
    for v in values:
        total = total + v
    return total


# ---------------------------------------------------------------------------
# Special values


def zeta_even(n: int) -> PiValue:
    """``zeta(2n)`` by Euler's formula, a single positive term in ``pi**(2n)``."""
    if n <= 0:
        raise ValueError(f"zeta_even needs n >= 1, got {n}")
    c = (-1) ** (n - 1) * bernoulli(2 * n) * 2 ** (2 * n) / (2 * factorial(2 * n))
    return PiValue.monomial(c, n)


def zt_of_e(i: int) -> PiValue:
    """Image of the elementary symmetric function ``e_i``: ``pi**(2i)/(2i+1)!``.

    This is also ``zeta(2, 2, ..., 2)`` with ``i`` arguments.
    """
    if i < 0:
        raise ValueError(f"index must be non-negative, got {i}")
    return PiValue.monomial(Fraction(1, factorial(2 * i + 1)), i)


def zt_of_h(i: int) -> PiValue:
    """Image of the complete symmetric function ``h_i``."""
    if i < 0:
        raise ValueError(f"index must be non-negative, got {i}")
    if i == 0:
        return PiValue.constant(1)
    c = 2 * (2 ** (2 * i - 1) - 1) * (-1) ** (i - 1) * bernoulli(2 * i) / factorial(2 * i)
    return PiValue.monomial(c, i)
