"""Randomized verification of the protection results and search for games
where an improvement hurts.

Randomness: numpy's PCG64 seeded through ``SeedSequence([seed, trial,
stream])``. Every generated object depends only on the master seed, the
trial id and a fixed per-purpose stream number, so any trial can be
replayed on its own and reports do not depend on execution order.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .equilibria import Equilibrium, enumerate_equilibria, maxmin
from .gamefile import serialize_game
from .game import BimatrixGame, is_constant_sum, shift_player_payoffs
from .perturbation import (
    ComparisonReport,
    CostedGame,
    Verdict,
    compare_improvement,
    h_transform,
    realize,
    relate,
    worst_best_payoffs,
)

log = logging.getLogger(__name__)

# stream numbers; changing them changes every pinned fixture
_GAME, _IMPROVE, _COSTS, _DECREASE, _SHIFT = range(5)

PROPERTIES = (
    "theorem1",
    "theorem2",
    "h_equivalence",
    "shift_invariance",
    "minimax_consistency",
    "oddness",
)


@dataclass(frozen=True)
class GenSpec:
    rows: int = 2
    cols: int = 2
    payoff_range: tuple[int, int] = (-5, 5)
    constant: Fraction = Fraction(0)
    seed: int = 0
    trials: int = 100

    def __post_init__(self):
        lo, hi = self.payoff_range
        if self.rows < 1 or self.cols < 1:
            raise ValueError("rows and cols must be positive")
        if lo > hi:
            raise ValueError(f"empty payoff range {self.payoff_range}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        object.__setattr__(self, "constant", Fraction(self.constant))

    @property
    def nonnegative_range(self) -> tuple[int, int]:
        lo, hi = self.payoff_range
        return max(lo, 0), max(hi, 0)


def trial_rng(spec: GenSpec, trial: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([spec.seed, trial, stream])))


def _draw(rng, bounds, shape) -> list:
    lo, hi = bounds
    values = rng.integers(lo, hi, size=shape, endpoint=True)
    return [[Fraction(int(v)) for v in row] for row in values]


def gen_general(spec: GenSpec, trial: int) -> BimatrixGame:
    rng = trial_rng(spec, trial, _GAME)
    shape = (spec.rows, spec.cols)
    u1 = _draw(rng, spec.payoff_range, shape)
    u2 = _draw(rng, spec.payoff_range, shape)
    return BimatrixGame.from_payoffs(u1, u2, name=f"general-{spec.seed}-{trial}")


def gen_constant_sum(spec: GenSpec, trial: int) -> BimatrixGame:
    rng = trial_rng(spec, trial, _GAME)
    u1 = _draw(rng, spec.payoff_range, (spec.rows, spec.cols))
    u2 = [[spec.constant - v for v in row] for row in u1]
    return BimatrixGame.from_payoffs(u1, u2, name=f"constsum-{spec.seed}-{trial}")


def gen_improvement(g: BimatrixGame, player: int, spec: GenSpec, trial: int) -> BimatrixGame:
    """Raise ``player``'s payoffs by nonnegative amounts and perturb the
    opponent's payoffs arbitrarily."""
    rng = trial_rng(spec, trial, _IMPROVE)
    shape = g.shape
    raise_by = _draw(rng, spec.nonnegative_range, shape)
    noise = _draw(rng, spec.payoff_range, shape)
    own = [[v + d for v, d in zip(row, drow)] for row, drow in zip(g.payoffs(player), raise_by)]
    other = [[v + d for v, d in zip(row, drow)] for row, drow in zip(g.payoffs(3 - player), noise)]
    u1, u2 = (own, other) if player == 1 else (other, own)
    return BimatrixGame(f"{g.name}-improved", g.row_actions, g.col_actions, u1, u2)


def gen_costed(spec: GenSpec, trial: int, opponent_cost_constant: bool) -> CostedGame:
    base = gen_constant_sum(spec, trial)
    rng = trial_rng(spec, trial, _COSTS)
    bounds = spec.nonnegative_range
    cost1 = _draw(rng, bounds, (1, spec.rows))[0]
    if opponent_cost_constant:
        cost2 = _draw(rng, bounds, (1, 1))[0] * spec.cols
    else:
        cost2 = _draw(rng, bounds, (1, spec.cols))[0]
    return CostedGame(base, cost1, cost2)


def gen_cost_decrease(costed: CostedGame, spec: GenSpec, trial: int) -> CostedGame:
    """Lower player 1's cost by a nonnegative amount per action."""
    rng = trial_rng(spec, trial, _DECREASE)
    cut = _draw(rng, spec.nonnegative_range, (1, len(costed.cost1)))[0]
    return costed.with_costs(cost1=[c - d for c, d in zip(costed.cost1, cut)])


@dataclass(frozen=True)
class Violation:
    trial: int
    # canonical game-file texts of the games involved, replayable by the CLI
    games: tuple[str, ...]
    equilibrium: Optional[Equilibrium]
    detail: str


@dataclass(frozen=True)
class PropertyReport:
    name: str
    spec: GenSpec
    trials: int
    violations: tuple[Violation, ...]
    skipped: int = 0
    elapsed: float = field(default=0.0, compare=False)
    options: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class TrialOutcome:
    skipped: bool = False
    violation: Optional[Violation] = None


def _theorem1(spec, trial, **_):
    player = 1 + trial % 2
    g = gen_constant_sum(spec, trial)
    improved = gen_improvement(g, player, spec, trial)
    floor = maxmin(g, player).value
    for e in enumerate_equilibria(improved):
        if e.payoff(player) < floor:
            return TrialOutcome(violation=Violation(
                trial,
                (serialize_game(g), serialize_game(improved)),
                e,
                f"player {player} gets {e.payoff(player)} < maxmin {floor}",
            ))
    return TrialOutcome()


def check_cost_decrease(
    before: CostedGame, after: CostedGame, trial: int, allow_degenerate: bool = False
) -> TrialOutcome:
    """Flag a HURT verdict for player 1 when moving from ``before`` to ``after``."""
    report = compare_improvement(realize(before), realize(after), 1, allow_degenerate)
    if report.verdict is Verdict.INDETERMINATE:
        return TrialOutcome(skipped=True)
    if report.verdict is Verdict.HURT:
        worst = min(report.after, key=lambda e: e.payoff(1))
        return TrialOutcome(violation=Violation(
            trial,
            (serialize_game(before), serialize_game(after)),
            worst,
            f"worst payoff fell from {report.before_worst} to {report.after_worst}",
        ))
    return TrialOutcome()


def _theorem2(spec, trial, opponent_cost_constant=True, fixtures=(), allow_degenerate=False, **_):
    if trial < 0:
        before, after = fixtures[-trial - 1]
        return check_cost_decrease(before, after, trial, allow_degenerate)
    before = gen_costed(spec, trial, opponent_cost_constant)
    return check_cost_decrease(before, gen_cost_decrease(before, spec, trial), trial, allow_degenerate)


def _h_equivalence(spec, trial, **_):
    costed = gen_costed(spec, trial, opponent_cost_constant=False)
    g, h = realize(costed), h_transform(costed)
    texts = (serialize_game(costed), serialize_game(h))
    if is_constant_sum(h) != costed.constant:
        return TrialOutcome(violation=Violation(
            trial, texts, None, f"H sums to {is_constant_sum(h)}, base to {costed.constant}"
        ))
    eg, eh = enumerate_equilibria(g), enumerate_equilibria(h)
    if eg.profiles() != eh.profiles():
        odd = next(iter(eg.profiles() ^ eh.profiles()))
        e = next((x for x in list(eg) + list(eh) if x.profile == odd), None)
        return TrialOutcome(violation=Violation(trial, texts, e, "equilibrium sets differ"))
    return TrialOutcome()


def _shift_invariance(spec, trial, **_):
    player = 1 + trial % 2
    g = gen_general(spec, trial)
    rng = trial_rng(spec, trial, _SHIFT)
    lo, hi = spec.nonnegative_range
    delta = Fraction(int(rng.integers(lo, hi, endpoint=True)))
    shifted = shift_player_payoffs(g, player, delta)
    texts = (serialize_game(g), serialize_game(shifted))
    eg, es = enumerate_equilibria(g), enumerate_equilibria(shifted)
    if [e.profile for e in eg] != [e.profile for e in es]:
        return TrialOutcome(violation=Violation(trial, texts, None, "equilibrium strategies changed"))
    bw, _ = worst_best_payoffs(eg, player)
    aw, _ = worst_best_payoffs(es, player)
    if aw != bw + delta:
        return TrialOutcome(violation=Violation(
            trial, texts, None, f"worst payoff {bw} -> {aw}, expected shift by {delta}"
        ))
    return TrialOutcome()


def _minimax_consistency(spec, trial, **_):
    g = gen_constant_sum(spec, trial)
    v1, v2 = maxmin(g, 1).value, maxmin(g, 2).value
    texts = (serialize_game(g),)
    if v1 + v2 != spec.constant:
        return TrialOutcome(violation=Violation(
            trial, texts, None, f"maxmin values {v1} + {v2} != {spec.constant}"
        ))
    for e in enumerate_equilibria(g):
        if e.payoffs != (v1, v2):
            return TrialOutcome(violation=Violation(
                trial, texts, e, f"equilibrium payoffs {e.payoffs} != maxmin ({v1}, {v2})"
            ))
    return TrialOutcome()


def _oddness(spec, trial, **_):
    g = gen_general(spec, trial)
    es = enumerate_equilibria(g)
    if es.game_degenerate:
        return TrialOutcome(skipped=True)
    if len(es) % 2 == 0:
        return TrialOutcome(violation=Violation(
            trial, (serialize_game(g),), None, f"{len(es)} equilibria in a nondegenerate game"
        ))
    return TrialOutcome()


_CHECKS = {
    "theorem1": _theorem1,
    "theorem2": _theorem2,
    "h_equivalence": _h_equivalence,
    "shift_invariance": _shift_invariance,
    "minimax_consistency": _minimax_consistency,
    "oddness": _oddness,
}


def run_trial(name: str, spec: GenSpec, trial: int, **options) -> TrialOutcome:
    """One trial of a property check; replays a reported violation."""
    try:
        check = _CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; choose from {', '.join(PROPERTIES)}") from None
    return check(spec, trial, **options)


def verify_property(name: str, spec: GenSpec, **options) -> PropertyReport:
    """Run ``spec.trials`` trials of a property.

    ``theorem2`` accepts ``opponent_cost_constant=False`` as a negative
    control, where violations are expected, ``fixtures``: explicit
    ``(before, after)`` costed-game pairs checked first as trials -1, -2, ...
    and ``allow_degenerate=True`` to judge degenerate draws on their
    extreme equilibria instead of skipping them.
    """
    start = time.perf_counter()
    violations, skipped = [], 0
    fixtures = options.get("fixtures", ())
    trials = [-k for k in range(1, len(fixtures) + 1)] + list(range(spec.trials))
    for trial in trials:
        outcome = run_trial(name, spec, trial, **options)
        skipped += outcome.skipped
        if outcome.violation is not None:
            log.info("%s: violation at trial %d: %s", name, trial, outcome.violation.detail)
            violations.append(outcome.violation)
    return PropertyReport(
        name=name,
        spec=spec,
        trials=len(trials),
        violations=tuple(violations),
        skipped=skipped,
        elapsed=time.perf_counter() - start,
        options=tuple(sorted((k, v) for k, v in options.items() if k != "fixtures")),
    )


@dataclass(frozen=True)
class Hit:
    trial: int
    before: BimatrixGame
    after: BimatrixGame
    report: ComparisonReport


def search_hurt(
    spec: GenSpec,
    player: int,
    constant_sum: bool = False,
    candidates: Optional[Iterable[tuple[BimatrixGame, BimatrixGame]]] = None,
    limit: Optional[int] = None,
) -> list[Hit]:
    """Trials in which a pointwise improvement lowers ``player``'s worst
    equilibrium payoff, in trial order.

    By default general games are drawn; ``constant_sum`` restricts draws to
    constant-sum games. Explicit ``candidates`` pairs are checked instead
    of drawing, numbered from 0. Degenerate draws are not counted as hits.
    """
    if candidates is None:
        gen = gen_constant_sum if constant_sum else gen_general

        def pairs():
            for trial in range(spec.trials):
                g = gen(spec, trial)
                yield g, gen_improvement(g, player, spec, trial)

        candidates = pairs()
    hits = []
    for trial, (before, after) in enumerate(candidates):
        if not relate(before, after, player).is_improvement:
            continue
        report = compare_improvement(before, after, player)
        if report.verdict is Verdict.HURT:
            hits.append(Hit(trial, before, after, report))
            if limit is not None and len(hits) >= limit:
                break
    return hits
