"""Cost-decomposed games and the before/after improvement comparison.

A costed game starts from a constant-sum base and subtracts from each
player an own-action cost: ``u_i(a) = base_i(a) - cost_i(a_i)``. Lowering a
cost is a pointwise improvement for that player. The comparison engine
measures what such an improvement does to the player's payoff in the
worst equilibrium.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .equilibria import EquilibriumSet, enumerate_equilibria
from .errors import ActionSpaceMismatch, DegenerateGameError, DimensionError, GameError
from .game import (
    BimatrixGame,
    ImprovementRelation,
    Relation,
    improvement_relation,
    is_constant_sum,
    to_fraction,
)


@dataclass(frozen=True)
class CostedGame:
    """Constant-sum ``base`` plus per-action costs for each player.

    Costs are subtracted. Negative costs act as subsidies.
    """

    base: BimatrixGame
    cost1: tuple[Fraction, ...]
    cost2: tuple[Fraction, ...]

    def __post_init__(self):
        c1 = tuple(to_fraction(v) for v in self.cost1)
        c2 = tuple(to_fraction(v) for v in self.cost2)
        m, n = self.base.shape
        if len(c1) != m or len(c2) != n:
            raise DimensionError(
                f"cost vectors of length {len(c1)}/{len(c2)} do not fit a {m}x{n} base"
            )
        if is_constant_sum(self.base) is None:
            raise GameError(f"base game {self.base.name!r} is not constant-sum")
        object.__setattr__(self, "cost1", c1)
        object.__setattr__(self, "cost2", c2)

    @property
    def name(self) -> str:
        return self.base.name

    @property
    def constant(self) -> Fraction:
        return is_constant_sum(self.base)

    def cost(self, player: int) -> tuple[Fraction, ...]:
        return self.cost1 if player == 1 else self.cost2

    def with_costs(self, cost1=None, cost2=None) -> "CostedGame":
        return CostedGame(
            self.base,
            self.cost1 if cost1 is None else cost1,
            self.cost2 if cost2 is None else cost2,
        )


def realize(costed: CostedGame) -> BimatrixGame:
    """The bimatrix game with each player's own-action cost subtracted."""
    b = costed.base
    u1 = tuple(tuple(v - costed.cost1[i] for v in row) for i, row in enumerate(b.u1))
    u2 = tuple(tuple(v - costed.cost2[j] for j, v in enumerate(row)) for row in b.u2)
    return BimatrixGame(b.name, b.row_actions, b.col_actions, u1, u2)


def h_transform(costed: CostedGame) -> BimatrixGame:
    """Add the opponent's cost back to each player's realized payoff.

    Each player's payoff changes only by a term depending on the opponent's
    action, so best responses and hence equilibria are unchanged, while the
    result is constant-sum with the base's constant.
    """
    g = realize(costed)
    u1 = tuple(tuple(v + costed.cost2[j] for j, v in enumerate(row)) for row in g.u1)
    u2 = tuple(tuple(v + costed.cost1[i] for v in row) for i, row in enumerate(g.u2))
    return BimatrixGame(f"{g.name}-H", g.row_actions, g.col_actions, u1, u2)


def worst_best_payoffs(eqset: EquilibriumSet, player: int) -> tuple[Fraction, Fraction]:
    values = eqset.payoffs(player)
    if not values:
        raise GameError("no equilibrium found; every finite game has one")
    return min(values), max(values)


class Verdict(str, enum.Enum):
    HURT = "HURT"
    NOT_HURT = "NOT_HURT"
    UNCHANGED = "UNCHANGED"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class ComparisonReport:
    player: int
    relation: ImprovementRelation
    before_worst: Fraction
    before_best: Fraction
    after_worst: Fraction
    after_best: Fraction
    verdict: Verdict
    before: EquilibriumSet
    after: EquilibriumSet
    degeneracy_note: Optional[str] = None

    @property
    def value(self) -> Fraction:
        return self.after_worst - self.before_worst


def _label_positions(sub: Sequence[str], full: Sequence[str]) -> Optional[list[int]]:
    index = {a: k for k, a in enumerate(full)}
    if any(a not in index for a in sub):
        return None
    return [index[a] for a in sub]


def relate(before: BimatrixGame, after: BimatrixGame, player: int) -> ImprovementRelation:
    """Improvement relation allowing the later game to add actions.

    Actions present only in ``after`` (for instance an action that used to
    be impossible) are an availability improvement. The pointwise relation
    is computed on the profiles both games share, matched by label.
    """
    if before.row_actions == after.row_actions and before.col_actions == after.col_actions:
        return improvement_relation(before, after, player)
    rows = _label_positions(before.row_actions, after.row_actions)
    cols = _label_positions(before.col_actions, after.col_actions)
    if rows is None or cols is None:
        raise ActionSpaceMismatch(
            "the later game must contain every action of the earlier one "
            f"({before.row_actions}x{before.col_actions} vs {after.row_actions}x{after.col_actions})"
        )
    common = after.restrict(rows, cols)
    rel = improvement_relation(before, common, player)
    added = tuple((1, a) for a in after.row_actions if a not in set(before.row_actions)) + tuple(
        (2, a) for a in after.col_actions if a not in set(before.col_actions)
    )
    kind = rel.kind
    if kind is Relation.UNCHANGED and any(p == player for p, _ in added):
        kind = Relation.IMPROVED_SOMEWHERE
    return ImprovementRelation(kind, rel.witness, added)


def compare_improvement(
    before: BimatrixGame,
    after: BimatrixGame,
    player: int,
    allow_degenerate: bool = False,
) -> ComparisonReport:
    """Compare the player's worst equilibrium payoff before and after a change.

    With a degenerate game involved the verdict is INDETERMINATE unless
    ``allow_degenerate`` is set. The reported bounds are taken over the
    extreme equilibria; payoffs are bilinear, so they are also the bounds
    over every equilibrium.
    """
    relation = relate(before, after, player)
    eq_before = enumerate_equilibria(before)
    eq_after = enumerate_equilibria(after)
    bw, bb = worst_best_payoffs(eq_before, player)
    aw, ab = worst_best_payoffs(eq_after, player)

    note = None
    degenerate = [name for name, es in (("before", eq_before), ("after", eq_after)) if es.game_degenerate]
    if degenerate:
        note = (
            f"degenerate {' and '.join(degenerate)} game; payoff bounds taken over "
            f"extreme equilibria of the equilibrium components"
        )

    if degenerate and not allow_degenerate:
        verdict = Verdict.INDETERMINATE
    elif aw < bw:
        verdict = Verdict.HURT
    elif aw == bw:
        verdict = Verdict.UNCHANGED
    else:
        verdict = Verdict.NOT_HURT
    return ComparisonReport(
        player=player,
        relation=relation,
        before_worst=bw,
        before_best=bb,
        after_worst=aw,
        after_best=ab,
        verdict=verdict,
        before=eq_before,
        after=eq_after,
        degeneracy_note=note,
    )


def value_of_improvement(before: BimatrixGame, after: BimatrixGame, player: int) -> Fraction:
    """Change in the player's worst equilibrium payoff; negative when hurt."""
    report = compare_improvement(before, after, player)
    if report.verdict is Verdict.INDETERMINATE:
        raise DegenerateGameError(report.degeneracy_note)
    return report.value
