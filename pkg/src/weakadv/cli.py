"""Command-line entry point.

Exit codes: 0 success, 1 a built-in scenario no longer reproduces its
pinned values, 2 input or parse error, 3 verdict INDETERMINATE because of
degeneracy, 4 a property violation was found.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .equilibria import enumerate_equilibria, maxmin
from .errors import GameError
from .gamefile import load_game_file, serialize_game
from .game import is_constant_sum
from .perturbation import Verdict, compare_improvement, h_transform
from .render import (
    render_comparison,
    render_equilibria,
    render_maxmin,
    render_property,
    render_scenario,
    render_search,
)
from .scenarios import COSTSUM, COSTSUM_NO_COST1, SCENARIO_NAMES, builtin_scenario, evaluate_scenario
from .search import PROPERTIES, GenSpec, search_hurt, verify_property

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INDETERMINATE, EXIT_VIOLATION = 0, 1, 2, 3, 4

# optional override of the default trial count for verify/search
TRIALS_ENV = "WEAKADV_TRIALS"


def _default_trials() -> int:
    raw = os.environ.get(TRIALS_ENV)
    return int(raw) if raw and raw.isdigit() and int(raw) > 0 else 100


def _player(text: str) -> int:
    if text not in ("1", "2"):
        raise argparse.ArgumentTypeError("player must be 1 or 2")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")

    gen = argparse.ArgumentParser(add_help=False)
    gen.add_argument("--trials", type=int, default=_default_trials())
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--rows", type=int, default=2)
    gen.add_argument("--cols", type=int, default=2)
    gen.add_argument("--low", type=int, default=-5, help="smallest random payoff")
    gen.add_argument("--high", type=int, default=5, help="largest random payoff")
    gen.add_argument("--dump-dir", type=Path, help="write offending games here as game files")

    parser = argparse.ArgumentParser(
        prog="weakadv",
        description="Check whether improving a player's payoffs can lower their worst equilibrium payoff.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="list all (extreme) Nash equilibria")
    p.add_argument("file")

    p = sub.add_parser("maxmin", parents=[common], help="a player's security strategy and value")
    p.add_argument("file")
    p.add_argument("--player", type=_player, required=True)

    p = sub.add_parser("htransform", parents=[common], help="constant-sum game equivalent to a costed game")
    p.add_argument("file")

    p = sub.add_parser("compare", parents=[common], help="worst equilibrium payoff before and after a change")
    p.add_argument("before")
    p.add_argument("after")
    p.add_argument("--player", type=_player, required=True)
    p.add_argument("--allow-degenerate", action="store_true")

    p = sub.add_parser("verify", parents=[common, gen], help="randomized property check")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument(
        "--two-sided",
        action="store_true",
        help="theorem2 negative control: both players' costs vary; includes the built-in counterexample",
    )

    p = sub.add_parser("search", parents=[common, gen], help="random games where an improvement hurts")
    p.add_argument("--player", type=_player, default=1)
    p.add_argument("--constant-sum", action="store_true")
    p.add_argument("--limit", type=int)

    p = sub.add_parser("scenario", parents=[common], help="reproduce a built-in example")
    p.add_argument("name", choices=SCENARIO_NAMES)
    p.add_argument("--export-dir", type=Path, help="write the scenario's games as game files")
    return parser


def _spec(args) -> GenSpec:
    return GenSpec(
        rows=args.rows,
        cols=args.cols,
        payoff_range=(args.low, args.high),
        seed=args.seed,
        trials=args.trials,
    )


def _dump(directory: Path, stem: str, texts) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    if isinstance(texts, dict):
        items = texts.items()
    else:
        items = enumerate(texts)
    for key, text in items:
        (directory / f"{stem}-{key}.game").write_text(text)


def _run(args) -> int:
    out = sys.stdout
    if args.command == "solve":
        game = load_game_file(args.file).game()
        out.write(render_equilibria(game, enumerate_equilibria(game)).text(args.format))
        return EXIT_OK

    if args.command == "maxmin":
        game = load_game_file(args.file).game()
        out.write(render_maxmin(game, args.player, maxmin(game, args.player)).text(args.format))
        return EXIT_OK

    if args.command == "htransform":
        gf = load_game_file(args.file)
        if gf.kind != "costed":
            raise GameError(f"{args.file} is not a costed game file")
        h = h_transform(gf.costed())
        out.write(f"# constant-sum {is_constant_sum(h)}\n" + serialize_game(h))
        return EXIT_OK

    if args.command == "compare":
        before = load_game_file(args.before).game()
        after = load_game_file(args.after).game()
        report = compare_improvement(before, after, args.player, args.allow_degenerate)
        out.write(render_comparison(before, after, report).text(args.format))
        return EXIT_INDETERMINATE if report.verdict is Verdict.INDETERMINATE else EXIT_OK

    if args.command == "verify":
        options = {}
        if args.two_sided:
            if args.property != "theorem2":
                raise GameError("--two-sided applies to theorem2 only")
            options = {"opponent_cost_constant": False, "fixtures": [(COSTSUM, COSTSUM_NO_COST1)]}
        report = verify_property(args.property, _spec(args), **options)
        out.write(render_property(report).text(args.format))
        if args.dump_dir:
            for v in report.violations:
                _dump(args.dump_dir, f"{args.property}-trial{v.trial}", v.games)
        return EXIT_VIOLATION if report.violations else EXIT_OK

    if args.command == "search":
        spec = _spec(args)
        hits = search_hurt(spec, args.player, constant_sum=args.constant_sum, limit=args.limit)
        out.write(render_search(spec, args.player, hits).text(args.format))
        if args.dump_dir:
            for h in hits:
                _dump(args.dump_dir, f"hurt-trial{h.trial}", {"before": serialize_game(h.before), "after": serialize_game(h.after)})
        return EXIT_OK

    if args.command == "scenario":
        scenario = builtin_scenario(args.name)
        result = evaluate_scenario(scenario)
        out.write(render_scenario(result).text(args.format))
        if args.export_dir:
            texts = {key: serialize_game(g) for key, g in scenario.games.items()}
            texts.update((f"costed-{key}", serialize_game(c)) for key, c in scenario.costed.items())
            _dump(args.export_dir, scenario.name, texts)
        return EXIT_OK if result.ok else EXIT_MISMATCH

    raise AssertionError(args.command)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return _run(args)
    except (GameError, ValueError, OSError) as exc:
        print(f"weakadv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
