"""Exact analysis of when improving a player's payoffs lowers their worst equilibrium payoff."""

from .equilibria import (
    Equilibrium,
    EquilibriumSet,
    MaxminResult,
    certify_equilibrium,
    enumerate_equilibria,
    iterated_strict_dominance,
    maxmin,
    pure_equilibria,
    security_level,
)
from .errors import ActionSpaceMismatch, DegenerateGameError, DimensionError, GameError, ParseError
from .game import (
    BimatrixGame,
    DominanceMode,
    ImprovementRelation,
    Relation,
    dominant_actions,
    expected_payoff,
    improvement_relation,
    is_constant_sum,
    pure_best_responses,
    shift_player_payoffs,
)
from .gamefile import GameFile, load_game_file, parse_game_file, serialize_game
from .perturbation import (
    ComparisonReport,
    CostedGame,
    Verdict,
    compare_improvement,
    h_transform,
    realize,
    value_of_improvement,
    worst_best_payoffs,
)
from .scenarios import SCENARIO_NAMES, builtin_scenario, evaluate_scenario
from .search import PROPERTIES, GenSpec, PropertyReport, search_hurt, verify_property

__version__ = "0.1.0"

__all__ = [
    "ActionSpaceMismatch",
    "BimatrixGame",
    "ComparisonReport",
    "CostedGame",
    "DegenerateGameError",
    "DimensionError",
    "DominanceMode",
    "Equilibrium",
    "EquilibriumSet",
    "GameError",
    "GameFile",
    "GenSpec",
    "ImprovementRelation",
    "MaxminResult",
    "PROPERTIES",
    "ParseError",
    "PropertyReport",
    "Relation",
    "SCENARIO_NAMES",
    "Verdict",
    "builtin_scenario",
    "certify_equilibrium",
    "compare_improvement",
    "dominant_actions",
    "enumerate_equilibria",
    "evaluate_scenario",
    "expected_payoff",
    "h_transform",
    "improvement_relation",
    "is_constant_sum",
    "iterated_strict_dominance",
    "load_game_file",
    "maxmin",
    "parse_game_file",
    "pure_best_responses",
    "pure_equilibria",
    "realize",
    "search_hurt",
    "security_level",
    "serialize_game",
    "shift_player_payoffs",
    "value_of_improvement",
    "verify_property",
    "worst_best_payoffs",
]
