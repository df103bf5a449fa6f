"""Exact linear algebra over the integers and rationals.

The equilibrium enumerator solves hundreds of thousands of small square
systems. Doing that with ``Fraction`` arithmetic is slow, so systems are
scaled to integer coefficients and solved fraction-free (Bareiss-style
Gauss-Jordan): every intermediate value stays an integer and the result is
the common denominator plus integer numerators.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Optional, Sequence


def integer_scale(values: Sequence[Fraction]) -> int:
    """Smallest positive integer turning all ``values`` into integers."""
    return lcm(1, *(Fraction(v).denominator for v in values))


def solve_integer_system(a: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[tuple[int, list[int]]]:
    """Solve ``a @ x = b`` for square integer ``a``.

    Returns ``(d, nums)`` with ``d > 0`` and ``x[k] = nums[k] / d``, or
    ``None`` when ``a`` is singular. ``d`` is ``|det a|`` and need not be
    the lowest common denominator.
    """
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    prev = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k]), None)
        if pivot_row is None:
            return None
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
        row_k = m[k]
        pivot = row_k[k]
        for i in range(n):
            if i == k:
                continue
            row_i = m[i]
            factor = row_i[k]
            if factor:
                for j in range(n + 1):
                    if j != k:
                        row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            else:
                for j in range(n + 1):
                    if j != k:
                        row_i[j] = (pivot * row_i[j]) // prev
            row_i[k] = 0
        prev = pivot
    d = m[n - 1][n - 1]
    nums = [m[k][n] for k in range(n)]
    if d < 0:
        d, nums = -d, [-v for v in nums]
    return d, nums


def solve_rational_system(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Solve a square rational system exactly; ``None`` if singular."""
    rows = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(a, b)]
    scaled = []
    for row in rows:
        s = integer_scale(row)
        scaled.append([int(v * s) for v in row])
    result = solve_integer_system([r[:-1] for r in scaled], [r[-1] for r in scaled])
    if result is None:
        return None
    d, nums = result
    return [Fraction(v, d) for v in nums]
