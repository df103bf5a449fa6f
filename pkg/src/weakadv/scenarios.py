"""Built-in worked examples and the small models behind them.

* ``factoring``: chicken game where one player could not factor before.
* ``subsidy``: a subsidy flips a dominant action and lowers the payoff.
* ``costsum``: constant-sum base with costs on both sides, where removing
  one player's costs hurts that player.
* ``freeride`` / ``freeride_smart``: shared-credit homework game compiled
  to an 11x11 bimatrix game.
* ``signaling``: placement-test decision problem with three student types.

Every bundle carries pinned expected values. :func:`evaluate_scenario`
recomputes them with the solver and reports one check per value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from .equilibria import enumerate_equilibria, pure_equilibria
from .errors import GameError
from .game import (
    BimatrixGame,
    Relation,
    dominant_actions,
    is_constant_sum,
    to_fraction,
)
from .perturbation import (
    ComparisonReport,
    CostedGame,
    compare_improvement,
    h_transform,
    realize,
)

F = Fraction


@dataclass(frozen=True)
class QuestionGameSpec:
    """Two students share credit ``max(x1, x2)`` for questions solved in
    sequence; ``marginal_costs_i[k]`` is player i's cost of question k+1."""

    n_questions: int
    marginal_costs1: tuple[Fraction, ...]
    marginal_costs2: tuple[Fraction, ...]

    def __post_init__(self):
        c1 = tuple(to_fraction(v) for v in self.marginal_costs1)
        c2 = tuple(to_fraction(v) for v in self.marginal_costs2)
        if self.n_questions < 1 or len(c1) != self.n_questions or len(c2) != self.n_questions:
            raise GameError("need n_questions >= 1 and one marginal cost per question")
        if any(v < 0 for v in c1 + c2):
            raise GameError("marginal costs must be nonnegative")
        object.__setattr__(self, "marginal_costs1", c1)
        object.__setattr__(self, "marginal_costs2", c2)


def build_question_game(spec: QuestionGameSpec, name: str = "questions") -> BimatrixGame:
    n = spec.n_questions

    def cumulative(costs):
        out, total = [F(0)], F(0)
        for c in costs:
            total += c
            out.append(total)
        return out

    c1, c2 = cumulative(spec.marginal_costs1), cumulative(spec.marginal_costs2)
    u1 = [[max(a, b) - c1[a] for b in range(n + 1)] for a in range(n + 1)]
    u2 = [[max(a, b) - c2[b] for b in range(n + 1)] for a in range(n + 1)]
    labels = tuple(str(k) for k in range(n + 1))
    return BimatrixGame(name, labels, labels, u1, u2)


@dataclass(frozen=True)
class StudentType:
    label: str
    hard_work_cost: Fraction
    marginal_test_costs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "hard_work_cost", to_fraction(self.hard_work_cost))
        costs = tuple(to_fraction(v) for v in self.marginal_test_costs)
        if self.hard_work_cost < 0 or any(v < 0 for v in costs):
            raise GameError("student costs must be nonnegative")
        object.__setattr__(self, "marginal_test_costs", costs)


@dataclass(frozen=True)
class SignalingSpec:
    test_size: int = 10
    honors_threshold: int = 7
    pass_utility: Fraction = F(100)
    skip_utility_per_question: Fraction = F(1)
    school_honors_pass: Fraction = F(1)
    school_honors_fail: Fraction = F(-1)
    school_regular: Fraction = F(0)
    types: tuple[StudentType, ...] = ()

    def __post_init__(self):
        if not 0 < self.honors_threshold <= self.test_size:
            raise GameError("honors threshold must lie in 1..test_size")
        for t in self.types:
            if len(t.marginal_test_costs) != self.test_size:
                raise GameError(f"type {t.label!r} needs {self.test_size} test costs")


@dataclass(frozen=True)
class StudentChoice:
    questions: int
    works_hard: bool
    utility: Fraction
    placed_honors: bool


def signaling_utility(spec: SignalingSpec, student: StudentType, questions: int, works_hard: bool) -> Fraction:
    honors = questions >= spec.honors_threshold
    test = spec.skip_utility_per_question * questions - sum(
        student.marginal_test_costs[:questions], F(0)
    )
    if works_hard:
        outcome = spec.pass_utility - student.hard_work_cost
    else:
        # relaxing passes the regular class only
        outcome = F(0) if honors else spec.pass_utility
    return test + outcome


def signaling_optimal_choice(spec: SignalingSpec, student: StudentType) -> StudentChoice:
    """Best (questions, effort) pair by exhaustive search.

    Ties go to fewer questions, then to relaxing.
    """
    best = None
    for q in range(spec.test_size + 1):
        for hard in (False, True):
            u = signaling_utility(spec, student, q, hard)
            if best is None or u > best.utility:
                best = StudentChoice(q, hard, u, q >= spec.honors_threshold)
    return best


def signaling_self_confirming(
    spec: SignalingSpec, choices: Sequence[StudentChoice]
) -> tuple[bool, tuple[Fraction, ...]]:
    """Whether nobody placed in honors fails, and the school's payoff per choice."""
    utilities = []
    for c in choices:
        if not c.placed_honors:
            utilities.append(spec.school_regular)
        elif c.works_hard:
            utilities.append(spec.school_honors_pass)
        else:
            utilities.append(spec.school_honors_fail)
    confirmed = all(c.works_hard for c in choices if c.placed_honors)
    return confirmed, tuple(utilities)


def signaling_value_of_type_change(spec: SignalingSpec, source: StudentType, target: StudentType) -> Fraction:
    return (
        signaling_optimal_choice(spec, target).utility
        - signaling_optimal_choice(spec, source).utility
    )


# --- built-in inputs ---------------------------------------------------------

CHICKEN = BimatrixGame(
    "chicken",
    ("factor", "dont"),
    ("factor", "dont"),
    [[1, 1], [3, -10]],
    [[1, 3], [1, -10]],
)

SUBSIDY_BEFORE = BimatrixGame(
    "subsidy-before",
    ("a1", "b1"),
    ("a2", "b2"),
    [[2, -2], [3, -1]],
    [[1, 2], [1, -1]],
)

SUBSIDY_AFTER = BimatrixGame(
    "subsidy-after",
    ("a1", "b1"),
    ("a2", "b2"),
    [[4, 0], [3, -1]],
    [[1, 2], [1, -1]],
)

COSTSUM_BASE = BimatrixGame(
    "costsum",
    ("a1", "b1"),
    ("a2", "b2"),
    [[6, 2], [4, 1]],
    [[0, 4], [2, 5]],
)

# Costs are subtracted. Positive costs 3/2 and 7/2 are what produce the
# mixed equilibrium (1/2, 1/2) with payoffs (5/2, 1).
COSTSUM = CostedGame(COSTSUM_BASE, (F(3, 2), F(0)), (F(0), F(7, 2)))
COSTSUM_NO_COST1 = COSTSUM.with_costs(cost1=(F(0), F(0)))

FREERIDE = QuestionGameSpec(10, (F(1, 10),) * 10, (F(1, 10),) * 7 + (F(11, 10),) * 3)
FREERIDE_SMART = QuestionGameSpec(10, (F(1, 10),) * 10, (F(1, 10),) * 10)

SIGNALING = SignalingSpec(
    types=(
        StudentType("slow", F(100), (F(0),) * 6 + (F(11, 10),) * 4),
        StudentType("moderate", F(7), (F(0),) * 6 + (F(1, 2),) * 4),
        StudentType("fast", F(3), (F(0),) * 6 + (F(1, 5),) * 4),
    )
)


@dataclass(frozen=True)
class Scenario:
    name: str
    title: str
    games: dict = field(default_factory=dict)
    costed: dict = field(default_factory=dict)
    player: Optional[int] = None
    allow_degenerate: bool = False
    question_spec: Optional[QuestionGameSpec] = None
    signaling: Optional[SignalingSpec] = None
    expected: dict = field(default_factory=dict)

    @property
    def pair(self) -> Optional[tuple[BimatrixGame, BimatrixGame]]:
        if "before" in self.games and "after" in self.games:
            return self.games["before"], self.games["after"]
        return None


def _pure(m, i):
    return tuple(F(int(k == i)) for k in range(m))


def _factoring() -> Scenario:
    before = CHICKEN.remove_actions(1, ["factor"], name="chicken-no-factoring")
    return Scenario(
        "factoring",
        "player 1 cannot factor; then gets the same computer as player 2",
        games={"before": before, "after": CHICKEN},
        player=1,
        expected={
            "before.count": 1,
            "before.payoffs": [(F(3), F(1))],
            "after.count": 3,
            "after.payoffs": [(F(1), F(3)), (F(3), F(1)), (F(1), F(1))],
            "after.mixed": ((F(11, 13), F(2, 13)), (F(11, 13), F(2, 13))),
            "relation": Relation.IMPROVED_SOMEWHERE,
            "before_worst": F(3),
            "after_worst": F(1),
            "verdict": "HURT",
            "value": F(-2),
        },
    )


def _subsidy() -> Scenario:
    return Scenario(
        "subsidy",
        "a subsidy on a1 makes it dominant and lowers player 1's payoff",
        games={"before": SUBSIDY_BEFORE, "after": SUBSIDY_AFTER},
        player=1,
        expected={
            "before.profiles": [(_pure(2, 1), _pure(2, 0))],
            "before.payoffs": [(F(3), F(1))],
            "after.profiles": [(_pure(2, 0), _pure(2, 1))],
            "after.payoffs": [(F(0), F(2))],
            "before.dominant": ("b1",),
            "after.dominant": ("a1",),
            "welfare": (F(4), F(2)),
            "relation": Relation.IMPROVED_SOMEWHERE,
            "witness": ("a1", "a2"),
            "before_worst": F(3),
            "after_worst": F(0),
            "verdict": "HURT",
            "value": F(-3),
        },
    )


def _costsum() -> Scenario:
    half = (F(1, 2), F(1, 2))
    return Scenario(
        "costsum",
        "two-sided costs on a constant-sum base; dropping player 1's costs hurts player 1",
        games={
            "base": COSTSUM_BASE,
            "before": realize(COSTSUM),
            "after": realize(COSTSUM_NO_COST1),
            "H": h_transform(COSTSUM),
        },
        costed={"before": COSTSUM, "after": COSTSUM_NO_COST1},
        player=1,
        expected={
            "base.profiles": [(_pure(2, 0), _pure(2, 1))],
            "base.payoffs": [(F(2), F(4))],
            "before.profiles": [(half, half)],
            "before.payoffs": [(F(5, 2), F(1))],
            "after.profiles": [(_pure(2, 0), _pure(2, 1))],
            # player 2's value is pinned from the solver: 4 - 7/2
            "after.payoffs": [(F(2), F(1, 2))],
            "H.constant": F(6),
            "H.u1": ((F(9, 2), F(4)), (F(4), F(9, 2))),
            "H.u2": ((F(3, 2), F(2)), (F(2), F(3, 2))),
            "relation": Relation.IMPROVED_SOMEWHERE,
            "before_worst": F(5, 2),
            "after_worst": F(2),
            "verdict": "HURT",
            "value": F(-1, 2),
        },
    )


def _freeride() -> Scenario:
    game = build_question_game(FREERIDE, "freeride")
    return Scenario(
        "freeride",
        "student 2 stops after 7 questions, so student 1 does everything",
        games={"game": game},
        question_spec=FREERIDE,
        expected={
            "game.count": 1,
            "game.pure": [(("10", "0"), (F(9), F(10)))],
            "game.degenerate": False,
        },
    )


# The smart game is degenerate: against a 1/10-9/10 mix of 0 and 10
# questions every action pays 9, so its mixed equilibria form a continuum.
# This symmetric point is the one on both players' {0, 10} supports.
SMART_MIXED = (
    (F(1, 10),) + (F(0),) * 9 + (F(9, 10),),
    (F(1, 10),) + (F(0),) * 9 + (F(9, 10),),
)


def _freeride_smart() -> Scenario:
    before = build_question_game(FREERIDE, "freeride")
    after = build_question_game(FREERIDE_SMART, "freeride-smart")
    return Scenario(
        "freeride_smart",
        "student 2 becomes as fast as student 1 and loses the free ride",
        games={"before": before, "after": after},
        question_spec=FREERIDE_SMART,
        player=2,
        allow_degenerate=True,
        expected={
            "after.pure": [(("0", "10"), (F(10), F(9))), (("10", "0"), (F(9), F(10)))],
            "after.mixed": SMART_MIXED,
            "after.mixed_payoffs": (F(9), F(9)),
            "after.extreme_count": 21,
            "after.degenerate": True,
            "relation": Relation.IMPROVED_SOMEWHERE,
            "before_worst": F(10),
            "after_worst": F(9),
            "verdict": "HURT",
            "value": F(-1),
        },
    )


def _signaling() -> Scenario:
    return Scenario(
        "signaling",
        "placement test: slow and moderate students both stop at six questions",
        signaling=SIGNALING,
        expected={
            "choice.slow": StudentChoice(6, False, F(106), False),
            "choice.moderate": StudentChoice(6, False, F(106), False),
            "choice.fast": StudentChoice(10, True, F(531, 5), True),
            "self_confirming": True,
            "school_utilities": (F(0), F(0), F(1)),
            "value.slow->moderate": F(0),
            "value.slow->fast": F(1, 5),
        },
    )


_BUILDERS = {
    "factoring": _factoring,
    "subsidy": _subsidy,
    "costsum": _costsum,
    "freeride": _freeride,
    "freeride_smart": _freeride_smart,
    "signaling": _signaling,
}

SCENARIO_NAMES = tuple(_BUILDERS)


def builtin_scenario(name: str) -> Scenario:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise GameError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIO_NAMES)}") from None


# --- evaluation ---------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ScenarioResult:
    scenario: Scenario
    checks: tuple[Check, ...]
    report: Optional[ComparisonReport] = None
    choices: tuple[StudentChoice, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _pure_labels(game, eqset):
    out = []
    for e in eqset:
        if len(e.support1) == 1 and len(e.support2) == 1:
            out.append(
                ((game.row_actions[e.support1[0]], game.col_actions[e.support2[0]]), e.payoffs)
            )
    return sorted(out)


def evaluate_scenario(scenario: Scenario) -> ScenarioResult:
    """Recompute every pinned value of ``scenario`` from scratch."""
    exp = scenario.expected
    actual: dict[str, Any] = {}
    report = None
    choices: tuple[StudentChoice, ...] = ()

    for key, game in scenario.games.items():
        es = enumerate_equilibria(game)
        actual[f"{key}.count"] = len(es)
        actual[f"{key}.extreme_count"] = len(es)
        actual[f"{key}.payoffs"] = [e.payoffs for e in es]
        actual[f"{key}.profiles"] = [e.profile for e in es]
        actual[f"{key}.degenerate"] = es.game_degenerate
        actual[f"{key}.pure"] = _pure_labels(game, pure_equilibria(game))
        mixed = [e for e in es if len(e.support1) > 1 and len(e.support2) > 1]
        if mixed:
            pick = mixed[0]
            if f"{key}.mixed" in exp:
                pick = next((e for e in mixed if e.profile == exp[f"{key}.mixed"]), pick)
            actual[f"{key}.mixed"] = pick.profile
            actual[f"{key}.mixed_payoffs"] = pick.payoffs
        actual[f"{key}.dominant"] = tuple(
            game.row_actions[k] for k in dominant_actions(game, 1, "strict")
        )
        actual[f"{key}.u1"] = game.u1
        actual[f"{key}.u2"] = game.u2
        actual[f"{key}.constant"] = is_constant_sum(game)

    if scenario.pair is not None and scenario.player is not None:
        before, after = scenario.pair
        report = compare_improvement(before, after, scenario.player, scenario.allow_degenerate)
        actual.update(
            relation=report.relation.kind,
            witness=report.relation.witness,
            before_worst=report.before_worst,
            after_worst=report.after_worst,
            verdict=report.verdict.value,
            value=report.value,
        )
        if len(report.before) == 1 and len(report.after) == 1:
            actual["welfare"] = (sum(report.before[0].payoffs), sum(report.after[0].payoffs))

    if scenario.signaling is not None:
        spec = scenario.signaling
        choices = tuple(signaling_optimal_choice(spec, t) for t in spec.types)
        for t, c in zip(spec.types, choices):
            actual[f"choice.{t.label}"] = c
        confirmed, school = signaling_self_confirming(spec, choices)
        actual["self_confirming"] = confirmed
        actual["school_utilities"] = school
        by_label = {t.label: t for t in spec.types}
        for key in exp:
            if key.startswith("value.") and "->" in key:
                src, dst = key[len("value."):].split("->")
                actual[key] = signaling_value_of_type_change(spec, by_label[src], by_label[dst])

    checks = tuple(Check(k, v, actual.get(k)) for k, v in exp.items())
    return ScenarioResult(scenario, checks, report, choices)
