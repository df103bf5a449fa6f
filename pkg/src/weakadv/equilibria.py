"""Exact Nash equilibria and maxmin strategies of bimatrix games.

``enumerate_equilibria`` is support enumeration done one player at a time.
For every support ``I`` of a player's mixed strategy and every set ``S`` of
``|I|`` opponent actions, the square indifference system "the opponent is
indifferent across ``S``" is solved exactly. Solutions that are strictly
positive on ``I`` and make ``S`` best responses are the vertices of that
player's best-response polytope. Equilibria are the pairs of vertices in
which each support lies inside the other side's best-response set.

For nondegenerate games this is classic support enumeration (equal-size
supports, one solution per support pair). For degenerate games it still
returns every extreme equilibrium, i.e. the vertices of all equilibrium
components, and reports the degeneracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterator

from .errors import DimensionError
from .game import (
    BimatrixGame,
    Strategy,
    check_strategy,
    expected_payoff,
    pure,
    pure_best_responses,
    support,
)
from .linalg import integer_scale, solve_integer_system
from .simplex import maximize


@dataclass(frozen=True)
class Equilibrium:
    s1: Strategy
    s2: Strategy
    payoffs: tuple[Fraction, Fraction]
    support1: tuple[int, ...]
    support2: tuple[int, ...]
    # a best-response set is strictly larger than the matching support
    degenerate: bool = False

    @property
    def profile(self) -> tuple[Strategy, Strategy]:
        return self.s1, self.s2

    def payoff(self, player: int) -> Fraction:
        return self.payoffs[player - 1]


@dataclass(frozen=True)
class EquilibriumSet:
    equilibria: tuple[Equilibrium, ...]
    game_degenerate: bool

    def __iter__(self) -> Iterator[Equilibrium]:
        return iter(self.equilibria)

    def __len__(self) -> int:
        return len(self.equilibria)

    def __getitem__(self, k) -> Equilibrium:
        return self.equilibria[k]

    def profiles(self) -> set:
        return {e.profile for e in self.equilibria}

    def payoffs(self, player: int) -> list[Fraction]:
        return [e.payoff(player) for e in self.equilibria]


@dataclass(frozen=True)
class MaxminResult:
    strategy: Strategy
    value: Fraction


def _make_equilibrium(game: BimatrixGame, s1, s2, degenerate=None) -> Equilibrium:
    sup1, sup2 = support(s1), support(s2)
    if degenerate is None:
        br1, _ = pure_best_responses(game, 1, s2)
        br2, _ = pure_best_responses(game, 2, s1)
        degenerate = br1 != sup1 or br2 != sup2
    return Equilibrium(
        s1=s1,
        s2=s2,
        payoffs=(expected_payoff(game, s1, s2, 1), expected_payoff(game, s1, s2, 2)),
        support1=sup1,
        support2=sup2,
        degenerate=degenerate,
    )


def pure_equilibria(game: BimatrixGame) -> list[Equilibrium]:
    """Every pure profile in which both actions are best responses, row-major."""
    m, n = game.shape
    col_best = [max(game.u1[i][j] for i in range(m)) for j in range(n)]
    row_best = [max(row) for row in game.u2]
    found = []
    for i in range(m):
        for j in range(n):
            if game.u1[i][j] == col_best[j] and game.u2[i][j] == row_best[i]:
                found.append(_make_equilibrium(game, pure(i, m), pure(j, n)))
    return found


def iterated_strict_dominance(game: BimatrixGame) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row and column indices surviving iterated removal of actions strictly
    dominated by another pure action. No Nash equilibrium uses a removed
    action, and a removed action is never a best response to a strategy on
    the surviving actions.
    """
    rows = list(range(game.shape[0]))
    cols = list(range(game.shape[1]))
    u1, u2 = game.u1, game.u2
    changed = True
    while changed:
        changed = False
        for i in list(rows):
            if any(
                k != i and all(u1[k][j] > u1[i][j] for j in cols) for k in rows
            ):
                rows.remove(i)
                changed = True
        for j in list(cols):
            if any(
                k != j and all(u2[i][k] > u2[i][j] for i in rows) for k in cols
            ):
                cols.remove(j)
                changed = True
    return tuple(rows), tuple(cols)


@dataclass(frozen=True)
class _Vertex:
    support: tuple[int, ...]
    # denominators and numerators of the probabilities on ``support``
    denominator: int
    numerators: tuple[int, ...]
    best_responses: frozenset

    def strategy(self, size: int) -> Strategy:
        probs = [Fraction(0)] * size
        for k, num in zip(self.support, self.numerators):
            probs[k] = Fraction(num, self.denominator)
        return tuple(probs)


def _undominated(resp, rows, n_resp) -> list[int]:
    """Responder actions that are not weakly dominated (with a strict gap)
    over ``rows``. A dominated action can never be a best response to a
    strategy with full support on ``rows``."""
    cols = [[resp[i][j] for i in rows] for j in range(n_resp)]
    keep = []
    for j in range(n_resp):
        cj = cols[j]
        dominated = False
        for k in range(n_resp):
            if k == j:
                continue
            ck = cols[k]
            if ck != cj and all(a >= b for a, b in zip(ck, cj)):
                dominated = True
                break
        if not dominated:
            keep.append(j)
    return keep


def _vertices(resp: list[list[int]]) -> list[_Vertex]:
    """Vertices of the best-response polytope of the mixing player.

    ``resp[i][j]`` is the (integer-scaled) payoff of the responding player
    for response ``j`` when the mixing player uses action ``i``.
    """
    n_mix, n_resp = len(resp), len(resp[0])
    found: dict[tuple, _Vertex] = {}
    for i in range(n_mix):
        row = resp[i]
        best = max(row)
        br = frozenset(j for j, v in enumerate(row) if v == best)
        found[((i,), 1, (1,))] = _Vertex((i,), 1, (1,), br)
    for k in range(2, min(n_mix, n_resp) + 1):
        for rows in combinations(range(n_mix), k):
            candidates = _undominated(resp, rows, n_resp)
            if len(candidates) < k:
                continue
            sub = [resp[i] for i in rows]
            for ties in combinations(candidates, k):
                t0 = ties[0]
                system = [[r[t] - r[t0] for r in sub] for t in ties[1:]]
                system.append([1] * k)
                solved = solve_integer_system(system, [0] * (k - 1) + [1])
                if solved is None:
                    continue
                d, nums = solved
                if any(v <= 0 for v in nums):
                    continue
                values = [sum(p * r[j] for p, r in zip(nums, sub)) for j in range(n_resp)]
                best = max(values)
                if values[t0] != best:
                    continue
                g = gcd(d, *nums)
                key = (rows, d // g, tuple(v // g for v in nums))
                if key not in found:
                    br = frozenset(j for j, v in enumerate(values) if v == best)
                    found[key] = _Vertex(rows, d // g, key[2], br)
    return list(found.values())


def _integer_matrix(matrix) -> list[list[int]]:
    scale = integer_scale([v for row in matrix for v in row])
    return [[int(v * scale) for v in row] for row in matrix]


@lru_cache(maxsize=512)
def enumerate_equilibria(game: BimatrixGame) -> EquilibriumSet:
    """All extreme Nash equilibria of ``game``, exactly.

    For a nondegenerate game these are all of its equilibria and their
    number is odd. For a degenerate game every equilibrium is a convex
    combination of listed ones within some component, ``game_degenerate``
    is set, and each listed equilibrium whose best-response sets exceed its
    supports is flagged ``degenerate``.
    """
    m, n = game.shape
    rows, cols = iterated_strict_dominance(game)
    reduced = game.restrict(rows, cols)
    # mixing player 1: player 2 responds; mixing player 2: player 1 responds
    xs = _vertices(_integer_matrix(reduced.u2))
    ys = _vertices(_integer_matrix(tuple(zip(*reduced.u1))))

    degenerate_game = any(len(v.best_responses) > len(v.support) for v in xs + ys)
    pairs = []
    for x in xs:
        for y in ys:
            if set(x.support) <= y.best_responses and set(y.support) <= x.best_responses:
                degenerate = x.best_responses != set(y.support) or y.best_responses != set(x.support)
                s1r, s2r = x.strategy(len(rows)), y.strategy(len(cols))
                s1 = [Fraction(0)] * m
                s2 = [Fraction(0)] * n
                for k, p in zip(rows, s1r):
                    s1[k] = p
                for k, q in zip(cols, s2r):
                    s2[k] = q
                pairs.append(_make_equilibrium(game, tuple(s1), tuple(s2), degenerate))
    pairs.sort(
        key=lambda e: (len(e.support1) + len(e.support2), e.support1, e.support2, e.s1, e.s2)
    )
    return EquilibriumSet(tuple(pairs), degenerate_game)


def certify_equilibrium(game: BimatrixGame, e: Equilibrium) -> bool:
    """Independent exact check that ``e`` is a Nash equilibrium of ``game``
    with correctly recorded supports and payoffs."""
    m, n = game.shape
    if len(e.s1) != m or len(e.s2) != n:
        raise DimensionError(
            f"equilibrium of shape {len(e.s1)}x{len(e.s2)} does not fit a {m}x{n} game"
        )
    try:
        s1, s2 = check_strategy(e.s1, m), check_strategy(e.s2, n)
    except ValueError:
        return False
    if support(s1) != tuple(e.support1) or support(s2) != tuple(e.support2):
        return False
    br1, _ = pure_best_responses(game, 1, s2)
    br2, _ = pure_best_responses(game, 2, s1)
    if not set(e.support1) <= set(br1) or not set(e.support2) <= set(br2):
        return False
    return tuple(e.payoffs) == (
        expected_payoff(game, s1, s2, 1),
        expected_payoff(game, s1, s2, 2),
    )


def maxmin(game: BimatrixGame, player: int) -> MaxminResult:
    """The player's maxmin (security) strategy and value, by exact LP.

    Payoffs are shifted to be positive, then the opponent-side LP
    ``max sum(w) s.t. M w <= 1, w >= 0`` is solved; its optimal dual is the
    player's optimal strategy up to normalization.
    """
    own = game.oriented(player)
    lowest = min(v for row in own for v in row)
    shift = 1 - lowest
    shifted = [[v + shift for v in row] for row in own]
    n_opp = len(shifted[0])
    solution = maximize([1] * n_opp, shifted, [1] * len(shifted))
    total = solution.value
    strategy = tuple(z / total for z in solution.duals)
    return MaxminResult(strategy=strategy, value=1 / total - shift)


def security_level(game: BimatrixGame, player: int, strategy) -> Fraction:
    """Minimum payoff of ``strategy`` over the opponent's pure actions."""
    own = game.oriented(player)
    strategy = check_strategy(strategy, len(own))
    return min(
        sum((p * own[i][j] for i, p in enumerate(strategy)), Fraction(0))
        for j in range(len(own[0]))
    )
