"""Human and machine renderings of analysis results.

Machine output is one ``KEY field=value ...`` record per line (or a bare
``KEY value``). Rationals print canonically as ``p/q`` or as an integer.
Nothing time- or environment-dependent goes into machine output.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction

from .equilibria import EquilibriumSet, MaxminResult, enumerate_equilibria
from .game import BimatrixGame, ImprovementRelation
from .perturbation import ComparisonReport
from .scenarios import ScenarioResult, StudentChoice, signaling_self_confirming
from .search import GenSpec, Hit, PropertyReport


@dataclass(frozen=True)
class RenderedReport:
    human: str
    machine: str

    def text(self, fmt: str) -> str:
        return self.machine if fmt == "machine" else self.human


def value(v) -> str:
    """Compact, whitespace-free rendering of a result value."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, enum.Enum):
        return str(v.value)
    if isinstance(v, StudentChoice):
        effort = "hard" if v.works_hard else "relax"
        placed = "honors" if v.placed_honors else "regular"
        return f"({v.questions},{effort},{v.utility},{placed})"
    if isinstance(v, tuple):
        return "(" + ",".join(value(x) for x in v) + ")"
    if isinstance(v, list):
        return "[" + ",".join(value(x) for x in v) + "]"
    if v is None:
        return "none"
    return str(v).replace(" ", "_")


def _vec(values) -> str:
    return ",".join(str(v) for v in values)


def _token(text: str) -> str:
    return text.replace(" ", "_") if text else "-"


def _quoted(text: str) -> str:
    return json.dumps(text)


def _mixed(labels, strategy) -> str:
    parts = [f"{labels[k]}:{p}" if p != 1 else labels[k] for k, p in enumerate(strategy) if p]
    return " ".join(parts)


def equilibria_lines(game: BimatrixGame, eqset: EquilibriumSet, tag: str = "") -> list[str]:
    extra = f" game={tag}" if tag else ""
    lines = []
    for k, e in enumerate(eqset, start=1):
        lines.append(
            f"EQUILIBRIUM{extra} index={k} s1={_vec(e.s1)} s2={_vec(e.s2)} "
            f"support1={','.join(game.row_actions[i] for i in e.support1)} "
            f"support2={','.join(game.col_actions[j] for j in e.support2)} "
            f"payoffs={_vec(e.payoffs)} degenerate={value(e.degenerate)}"
        )
    lines.append(f"EQUILIBRIA{extra} count={len(eqset)} game_degenerate={value(eqset.game_degenerate)}")
    return lines


def _equilibria_table(game: BimatrixGame, eqset: EquilibriumSet) -> list[str]:
    rows = [("#", "player 1", "player 2", "payoffs", "")]
    for k, e in enumerate(eqset, start=1):
        rows.append((
            str(k),
            _mixed(game.row_actions, e.s1),
            _mixed(game.col_actions, e.s2),
            f"({e.payoffs[0]}, {e.payoffs[1]})",
            "degenerate" if e.degenerate else "",
        ))
    widths = [max(len(r[c]) for r in rows) for c in range(5)]
    out = ["  " + "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    if eqset.game_degenerate:
        out.append("  game is degenerate: listed points are the extreme equilibria")
    return out


def render_equilibria(game: BimatrixGame, eqset: EquilibriumSet) -> RenderedReport:
    m, n = game.shape
    machine = [f"GAME name={_token(game.name)} rows={m} cols={n}"] + equilibria_lines(game, eqset)
    human = [f"{game.name} ({m}x{n}): {len(eqset)} equilibria"] + _equilibria_table(game, eqset)
    return RenderedReport("\n".join(human) + "\n", "\n".join(machine) + "\n")


def render_maxmin(game: BimatrixGame, player: int, result: MaxminResult) -> RenderedReport:
    machine = (
        f"GAME name={_token(game.name)} rows={game.shape[0]} cols={game.shape[1]}\n"
        f"MAXMIN player={player} value={result.value} strategy={_vec(result.strategy)}\n"
    )
    human = (
        f"{game.name}: player {player} can guarantee {result.value}\n"
        f"  by playing {_mixed(game.actions(player), result.strategy)}\n"
    )
    return RenderedReport(human, machine)


def _relation_line(rel: ImprovementRelation) -> str:
    witness = ",".join(rel.witness) if rel.witness else "-"
    added = ",".join(f"P{p}:{a}" for p, a in rel.added_actions) or "-"
    return f"RELATION kind={rel.kind.value} witness={witness} added={added}"


def comparison_lines(before: BimatrixGame, after: BimatrixGame, r: ComparisonReport) -> list[str]:
    lines = [
        f"COMPARE player={r.player} before={_token(before.name)} after={_token(after.name)}",
        _relation_line(r.relation),
    ]
    lines += equilibria_lines(before, r.before, "before")
    lines += equilibria_lines(after, r.after, "after")
    lines += [
        f"WORST before={r.before_worst} after={r.after_worst}",
        f"BEST before={r.before_best} after={r.after_best}",
        f"VALUE {r.value}",
        f"VERDICT {r.verdict.value}",
    ]
    if r.degeneracy_note:
        lines.append(f"NOTE {_quoted(r.degeneracy_note)}")
    return lines


def _comparison_human(before, after, r: ComparisonReport) -> list[str]:
    rel = r.relation
    out = [f"player {r.player}: {before.name} -> {after.name}"]
    desc = rel.kind.value.lower().replace("_", " ")
    if rel.witness:
        desc += f" (decided at {rel.witness[0]}/{rel.witness[1]})"
    if rel.added_actions:
        desc += "; newly available: " + ", ".join(f"P{p} {a}" for p, a in rel.added_actions)
    out.append(f"  payoff change: {desc}")
    out.append(f"  before: {len(r.before)} equilibria")
    out += ["  " + line for line in _equilibria_table(before, r.before)]
    out.append(f"  after: {len(r.after)} equilibria")
    out += ["  " + line for line in _equilibria_table(after, r.after)]
    out.append(f"  worst equilibrium payoff: {r.before_worst} -> {r.after_worst}")
    out.append(f"  best equilibrium payoff:  {r.before_best} -> {r.after_best}")
    out.append(f"  verdict: {r.verdict.value}")
    if r.degeneracy_note:
        out.append(f"  note: {r.degeneracy_note}")
    return out


def render_comparison(before, after, r: ComparisonReport) -> RenderedReport:
    return RenderedReport(
        "\n".join(_comparison_human(before, after, r)) + "\n",
        "\n".join(comparison_lines(before, after, r)) + "\n",
    )


def _spec_fields(spec: GenSpec) -> str:
    lo, hi = spec.payoff_range
    return f"seed={spec.seed} rows={spec.rows} cols={spec.cols} range={lo},{hi}"


def render_property(report: PropertyReport) -> RenderedReport:
    opts = "".join(f" {k}={value(v)}" for k, v in report.options)
    machine = [f"PROPERTY name={report.name} {_spec_fields(report.spec)} trials={report.trials}{opts}"]
    human = [
        f"{report.name}: {report.trials} trials "
        f"({report.spec.rows}x{report.spec.cols}, seed {report.spec.seed}) in {report.elapsed:.2f}s"
    ]
    for v in report.violations:
        eq = f" s1={_vec(v.equilibrium.s1)} s2={_vec(v.equilibrium.s2)}" if v.equilibrium else ""
        machine.append(f"VIOLATION trial={v.trial}{eq} detail={_quoted(v.detail)}")
        human.append(f"  trial {v.trial}: {v.detail}")
    machine.append(f"SKIPPED {report.skipped}")
    machine.append(f"VIOLATIONS {len(report.violations)}")
    human.append(f"  skipped as degenerate: {report.skipped}")
    human.append(f"  violations: {len(report.violations)}")
    return RenderedReport("\n".join(human) + "\n", "\n".join(machine) + "\n")


def render_search(spec: GenSpec, player: int, hits: list[Hit]) -> RenderedReport:
    machine = [f"SEARCH {_spec_fields(spec)} trials={spec.trials} player={player}"]
    human = [f"searched {spec.trials} games ({spec.rows}x{spec.cols}, seed {spec.seed}) for player {player}"]
    for h in hits:
        r = h.report
        machine.append(f"HIT trial={h.trial} before_worst={r.before_worst} after_worst={r.after_worst}")
        human.append(f"  trial {h.trial}: worst payoff {r.before_worst} -> {r.after_worst}")
    machine.append(f"HITS {len(hits)}")
    human.append(f"  {len(hits)} games where the improvement hurt")
    return RenderedReport("\n".join(human) + "\n", "\n".join(machine) + "\n")


def render_scenario(result: ScenarioResult) -> RenderedReport:
    sc = result.scenario
    machine = [f"SCENARIO name={sc.name}"]
    human = [f"{sc.name}: {sc.title}"]
    if result.report is not None:
        before, after = sc.pair
        machine += comparison_lines(before, after, result.report)
        human += _comparison_human(before, after, result.report)
    else:
        for key, game in sc.games.items():
            es = enumerate_equilibria(game)
            machine += equilibria_lines(game, es, key)
            human.append(f"  {key}: {len(es)} equilibria")
            human += ["  " + line for line in _equilibria_table(game, es)]
    if sc.signaling is not None:
        for t, c in zip(sc.signaling.types, result.choices):
            effort = "hard" if c.works_hard else "relax"
            placed = "honors" if c.placed_honors else "regular"
            machine.append(
                f"CHOICE type={t.label} questions={c.questions} effort={effort} "
                f"utility={c.utility} class={placed}"
            )
            human.append(
                f"  {t.label}: answers {c.questions}, "
                f"{'works hard' if c.works_hard else 'relaxes'}, {placed} class, utility {c.utility}"
            )
        confirmed, school = signaling_self_confirming(sc.signaling, result.choices)
        machine.append(f"SELF_CONFIRMING {value(confirmed)} school={_vec(school)}")
        human.append(f"  school beliefs self-confirming: {value(confirmed)} (school payoffs {_vec(school)})")
    for c in result.checks:
        machine.append(
            f"CHECK name={c.name} expected={value(c.expected)} actual={value(c.actual)} ok={value(c.ok)}"
        )
        if not c.ok:
            human.append(f"  MISMATCH {c.name}: expected {value(c.expected)}, got {value(c.actual)}")
    status = "ok" if result.ok else "mismatch"
    machine.append(f"STATUS {status}")
    human.append(f"  {sum(c.ok for c in result.checks)}/{len(result.checks)} pinned values reproduced")
    return RenderedReport("\n".join(human) + "\n", "\n".join(machine) + "\n")
