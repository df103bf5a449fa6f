"""Exact rational simplex for LPs with a feasible origin.

Solves ``max c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0`` on a dense
Fraction tableau. Entering and leaving variables follow Bland's rule, so
the method terminates on degenerate problems without cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class UnboundedError(ArithmeticError):
    pass


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    # one multiplier per constraint; an optimal solution of the dual LP
    duals: tuple[Fraction, ...]
    pivots: int


def maximize(c: Sequence, a: Sequence[Sequence], b: Sequence) -> LPSolution:
    m, n = len(a), len(c)
    if any(len(row) != n for row in a) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("origin must be feasible (b >= 0)")

    # columns 0..n-1 structural, n..n+m-1 slack, last column rhs
    tableau = []
    for i, row in enumerate(a):
        slack = [Fraction(int(k == i)) for k in range(m)]
        tableau.append([Fraction(v) for v in row] + slack + [Fraction(b[i])])
    # reduced costs, stored as -c so that optimality means no negative entry
    objective = [-Fraction(v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + i for i in range(m)]
    width = n + m

    pivots = 0
    while True:
        entering = next((j for j in range(width) if objective[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise UnboundedError("objective is unbounded")
        leave = best[1]
        _pivot(tableau, objective, leave, entering)
        basis[leave] = entering
        pivots += 1

    x = [Fraction(0)] * width
    for i, var in enumerate(basis):
        x[var] = tableau[i][-1]
    return LPSolution(
        value=objective[-1],
        x=tuple(x[:n]),
        duals=tuple(objective[n:width]),
        pivots=pivots,
    )


def _pivot(tableau, objective, r, col):
    row = tableau[r]
    p = row[col]
    row[:] = [v / p for v in row]
    for other in tableau:
        if other is not row and other[col]:
            f = other[col]
            other[:] = [v - f * w for v, w in zip(other, row)]
    f = objective[col]
    if f:
        objective[:] = [v - f * w for v, w in zip(objective, row)]
