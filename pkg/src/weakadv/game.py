"""Exact two-player normal-form games and elementary queries on them.

All numbers are :class:`fractions.Fraction`. Floats are rejected at
construction so that no rounding can leak into equilibrium computations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence

from .errors import ActionSpaceMismatch, DimensionError, GameError

Matrix = tuple[tuple[Fraction, ...], ...]
Strategy = tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Integers, Fractions, Decimals and numeric strings (``"3"``, ``"-7/2"``,
    ``"0.1"``) are accepted. Floats are refused because their binary value
    is almost never the number the caller meant.
    """
    if isinstance(value, bool):
        raise GameError(f"booleans are not payoffs: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise GameError(f"non-finite value: {value}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GameError(f"not an exact number: {value!r}") from exc
    raise GameError(f"cannot represent {value!r} ({type(value).__name__}) exactly")


def _matrix(rows, m: int, n: int, what: str) -> Matrix:
    rows = tuple(tuple(to_fraction(v) for v in row) for row in rows)
    if len(rows) != m or any(len(r) != n for r in rows):
        shape = f"{len(rows)}x{'/'.join(str(len(r)) for r in rows) or 0}"
        raise DimensionError(f"{what} has shape {shape}, expected {m}x{n}")
    return rows


def _other(player: int) -> int:
    _check_player(player)
    return 3 - player


def _check_player(player: int) -> None:
    if player not in (1, 2):
        raise GameError(f"player must be 1 or 2, got {player!r}")


@dataclass(frozen=True)
class BimatrixGame:
    """A two-player game given by one payoff matrix per player.

    ``u1[i][j]`` and ``u2[i][j]`` are the payoffs when the row player
    picks ``row_actions[i]`` and the column player ``col_actions[j]``.
    Instances are immutable and hashable.
    """

    name: str
    row_actions: tuple[str, ...]
    col_actions: tuple[str, ...]
    u1: Matrix
    u2: Matrix

    def __post_init__(self):
        rows = tuple(str(a) for a in self.row_actions)
        cols = tuple(str(a) for a in self.col_actions)
        if not rows or not cols:
            raise DimensionError("each player needs at least one action")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise GameError("action labels must be unique per player")
        object.__setattr__(self, "row_actions", rows)
        object.__setattr__(self, "col_actions", cols)
        object.__setattr__(self, "u1", _matrix(self.u1, len(rows), len(cols), "u1"))
        object.__setattr__(self, "u2", _matrix(self.u2, len(rows), len(cols), "u2"))

    @classmethod
    def from_payoffs(cls, u1, u2, name="game", row_actions=None, col_actions=None):
        m, n = len(u1), len(u1[0]) if u1 else 0
        if row_actions is None:
            row_actions = [f"r{i}" for i in range(m)]
        if col_actions is None:
            col_actions = [f"c{j}" for j in range(n)]
        return cls(name, tuple(row_actions), tuple(col_actions), u1, u2)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_actions), len(self.col_actions)

    def payoffs(self, player: int) -> Matrix:
        _check_player(player)
        return self.u1 if player == 1 else self.u2

    def actions(self, player: int) -> tuple[str, ...]:
        _check_player(player)
        return self.row_actions if player == 1 else self.col_actions

    def oriented(self, player: int) -> Matrix:
        """The player's payoffs with their own actions as rows."""
        if player == 1:
            return self.u1
        _check_player(player)
        return tuple(zip(*self.u2))

    def with_payoffs(self, player: int, matrix, name: Optional[str] = None) -> "BimatrixGame":
        u1, u2 = (matrix, self.u2) if player == 1 else (self.u1, matrix)
        return BimatrixGame(name or self.name, self.row_actions, self.col_actions, u1, u2)

    def restrict(self, rows: Sequence[int], cols: Sequence[int], name=None) -> "BimatrixGame":
        """Sub-game on the given row and column indices (in the given order)."""
        return BimatrixGame(
            name or self.name,
            tuple(self.row_actions[i] for i in rows),
            tuple(self.col_actions[j] for j in cols),
            tuple(tuple(self.u1[i][j] for j in cols) for i in rows),
            tuple(tuple(self.u2[i][j] for j in cols) for i in rows),
        )

    def remove_actions(self, player: int, labels: Sequence[str], name=None) -> "BimatrixGame":
        """Drop actions of one player, e.g. actions that are impossible for them."""
        own = self.actions(player)
        missing = set(labels) - set(own)
        if missing:
            raise GameError(f"player {player} has no action(s) {sorted(missing)}")
        keep = [k for k, a in enumerate(own) if a not in set(labels)]
        if not keep:
            raise DimensionError(f"removing {list(labels)} leaves player {player} no actions")
        m, n = self.shape
        rows = keep if player == 1 else range(m)
        cols = keep if player == 2 else range(n)
        return self.restrict(list(rows), list(cols), name=name)


def check_strategy(probabilities, size: int) -> Strategy:
    """Validate a mixed strategy of the given length and return it as a tuple."""
    s = tuple(to_fraction(p) for p in probabilities)
    if len(s) != size:
        raise DimensionError(f"strategy has {len(s)} entries, expected {size}")
    if any(p < 0 for p in s):
        raise GameError(f"negative probability in {format_vector(s)}")
    if sum(s) != 1:
        raise GameError(f"probabilities sum to {sum(s)}, not 1")
    return s


def pure(index: int, size: int) -> Strategy:
    """Point-mass strategy on action ``index``."""
    if not 0 <= index < size:
        raise DimensionError(f"action index {index} out of range for {size} actions")
    return tuple(Fraction(int(k == index)) for k in range(size))


def support(strategy: Sequence[Fraction]) -> tuple[int, ...]:
    return tuple(k for k, p in enumerate(strategy) if p != 0)


def format_vector(values) -> str:
    return ",".join(str(v) for v in values)


def expected_payoff(game: BimatrixGame, s1, s2, player: int) -> Fraction:
    """Expected payoff of ``player`` when the row player mixes ``s1`` and the column player ``s2``."""
    m, n = game.shape
    s1 = check_strategy(s1, m)
    s2 = check_strategy(s2, n)
    u = game.payoffs(player)
    total = Fraction(0)
    for i, p in enumerate(s1):
        if p:
            total += p * sum((q * u[i][j] for j, q in enumerate(s2) if q), Fraction(0))
    return total


def action_values(game: BimatrixGame, player: int, opponent) -> tuple[Fraction, ...]:
    """Expected payoff of each pure action of ``player`` against a mixed opponent."""
    own = game.oriented(player)
    opp = check_strategy(opponent, len(game.actions(_other(player))))
    return tuple(sum((q * row[j] for j, q in enumerate(opp) if q), Fraction(0)) for row in own)


def pure_best_responses(game: BimatrixGame, player: int, opponent) -> tuple[tuple[int, ...], Fraction]:
    """All pure actions of ``player`` maximizing expected payoff, and that maximum."""
    values = action_values(game, player, opponent)
    best = max(values)
    return tuple(k for k, v in enumerate(values) if v == best), best


def is_constant_sum(game: BimatrixGame) -> Optional[Fraction]:
    """The constant ``u1 + u2`` if it is the same at every profile, else ``None``."""
    total = game.u1[0][0] + game.u2[0][0]
    for r1, r2 in zip(game.u1, game.u2):
        for a, b in zip(r1, r2):
            if a + b != total:
                return None
    return total


class DominanceMode(str, enum.Enum):
    STRICT = "strict"
    WEAK = "weak"


def dominant_actions(game: BimatrixGame, player: int, mode) -> tuple[int, ...]:
    """Actions of ``player`` that dominate every other own action.

    ``strict``: strictly better than each other action against every
    opponent pure action. ``weak``: at least as good against every opponent
    pure action, i.e. a best response to everything.
    """
    mode = DominanceMode(mode)
    own = game.oriented(player)
    better = (lambda a, b: a > b) if mode is DominanceMode.STRICT else (lambda a, b: a >= b)
    result = []
    for k, row in enumerate(own):
        if all(
            all(better(a, b) for a, b in zip(row, other))
            for t, other in enumerate(own)
            if t != k
        ):
            result.append(k)
    return tuple(result)


class Relation(str, enum.Enum):
    IMPROVED_SOMEWHERE = "IMPROVED_SOMEWHERE"
    UNCHANGED = "UNCHANGED"
    NOT_IMPROVED = "NOT_IMPROVED"


@dataclass(frozen=True)
class ImprovementRelation:
    """Pointwise comparison of one player's payoffs across two games.

    ``witness`` is the first profile (row-major, as a pair of labels) where
    the relation is decided. ``added_actions`` lists ``(player, label)``
    pairs available only in the later game.
    """

    kind: Relation
    witness: Optional[tuple[str, str]] = None
    added_actions: tuple[tuple[int, str], ...] = field(default=())

    @property
    def is_improvement(self) -> bool:
        """True when the later game is weakly better for the player everywhere."""
        return self.kind is not Relation.NOT_IMPROVED


def _same_action_space(before: BimatrixGame, after: BimatrixGame) -> None:
    if before.row_actions != after.row_actions or before.col_actions != after.col_actions:
        raise ActionSpaceMismatch(
            f"action spaces differ: {before.row_actions}x{before.col_actions} "
            f"vs {after.row_actions}x{after.col_actions}"
        )


def improvement_relation(before: BimatrixGame, after: BimatrixGame, player: int) -> ImprovementRelation:
    """Classify ``after`` against ``before`` on ``player``'s payoffs only.

    The opponent's matrix is ignored: it may change arbitrarily.
    """
    _same_action_space(before, after)
    old, new = before.payoffs(player), after.payoffs(player)
    raised = None
    for i, (r_old, r_new) in enumerate(zip(old, new)):
        for j, (a, b) in enumerate(zip(r_old, r_new)):
            if b < a:
                return ImprovementRelation(
                    Relation.NOT_IMPROVED, (before.row_actions[i], before.col_actions[j])
                )
            if b > a and raised is None:
                raised = (before.row_actions[i], before.col_actions[j])
    if raised is not None:
        return ImprovementRelation(Relation.IMPROVED_SOMEWHERE, raised)
    return ImprovementRelation(Relation.UNCHANGED)


def shift_player_payoffs(game: BimatrixGame, player: int, delta) -> BimatrixGame:
    """Add ``delta`` to every payoff of ``player``; the other matrix is untouched."""
    delta = to_fraction(delta)
    shifted = tuple(tuple(v + delta for v in row) for row in game.payoffs(player))
    return game.with_payoffs(player, shifted)
