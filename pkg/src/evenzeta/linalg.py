"""Exact linear solves by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def solve_fraction_free(matrix: Sequence[Sequence[int]], rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly for a square nonsingular integer matrix.

    The right-hand side may be rational; it is cleared to integers first so
    the elimination stays in integer arithmetic until back substitution.
    Raises ``ValueError`` on a singular system.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("need a square system with a matching right-hand side")
    rhs = [Fraction(v) for v in rhs]
    scale = lcm(*(v.denominator for v in rhs)) if rhs else 1
    aug = [[int(x) for x in row] + [int(v * scale)] for row, v in zip(matrix, rhs)]

    prev = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if aug[r][k]), None)
        if pivot is None:
            raise ValueError("singular system")
        if pivot != k:
            aug[k], aug[pivot] = aug[pivot], aug[k]
        pk = aug[k][k]
        for i in range(k + 1, n):
            row, aik = aug[i], aug[i][k]
            for j in range(k + 1, n + 1):
                # exact by Sylvester's identity
                row[j] = (pk * row[j] - aik * aug[k][j]) // prev
            row[k] = 0
        prev = pk

    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n]) - sum((aug[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = acc / aug[i][i]
    return [v / scale for v in x]
