"""Plain-text game files.

Normal games::

    game: chicken
    rows: factor dont
    cols: factor dont
    u1:
      1 1
      3 -10
    u2:
      1 3
      1 -10
    removed: P1 factor        # optional: actions that are impossible

Costed games replace ``game:``/``u1:``/``u2:`` with ``costed:``,
``base1:``/``base2:`` (a constant-sum base) and one-line ``cost1:`` and
``cost2:`` vectors. Numbers are integers, ``p/q`` fractions or finite
decimals, all read exactly. ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Union

from .errors import GameError, ParseError
from .game import BimatrixGame, is_constant_sum
from .perturbation import CostedGame, realize

_NUMBER = re.compile(r"[+-]?(?:\d+(?:/\d+)?|(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)")
_HEADER = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")

_MATRIX_KEYS = {"normal": ("u1", "u2"), "costed": ("base1", "base2")}
_VECTOR_KEYS = {"normal": (), "costed": ("cost1", "cost2")}
_ALL_KEYS = {"game", "costed", "rows", "cols", "u1", "u2", "base1", "base2", "cost1", "cost2", "removed"}


@dataclass(frozen=True)
class GameFile:
    kind: str
    name: str
    row_actions: tuple[str, ...]
    col_actions: tuple[str, ...]
    # matrices by key ("u1", "u2", "base1", "base2") and vectors ("cost1", "cost2")
    blocks: dict = field(default_factory=dict, compare=True)
    removed: tuple[tuple[int, str], ...] = ()

    def full_game(self) -> BimatrixGame:
        k1, k2 = _MATRIX_KEYS[self.kind]
        return BimatrixGame(self.name, self.row_actions, self.col_actions, self.blocks[k1], self.blocks[k2])

    def costed(self) -> CostedGame:
        if self.kind != "costed":
            raise ValueError(f"{self.name!r} is a normal game file, not a costed one")
        return CostedGame(self.full_game(), self.blocks["cost1"], self.blocks["cost2"])

    def game(self) -> BimatrixGame:
        """The game to analyze: removals applied, costs subtracted."""
        if self.kind == "costed":
            return realize(self.costed())
        g = self.full_game()
        for player in (1, 2):
            labels = [a for p, a in self.removed if p == player]
            if labels:
                g = g.remove_actions(player, labels)
        return g


def parse_number(token: str, line=None, column=None) -> Fraction:
    if not _NUMBER.fullmatch(token):
        raise ParseError(f"malformed number {token!r}", line, column)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line, column) from None


def _tokens(text: str, offset: int):
    """(column, token) pairs of whitespace-separated tokens, 1-based columns."""
    return [(m.start() + offset + 1, m.group()) for m in re.finditer(r"\S+", text)]


def parse_game_file(text: str) -> GameFile:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if content.strip():
            lines.append((number, content))

    kind = name = None
    rows = cols = None
    blocks: dict = {}
    seen: dict[str, int] = {}
    removed: list[tuple[int, str]] = []

    pos = 0
    while pos < len(lines):
        number, content = lines[pos]
        pos += 1
        header = _HEADER.match(content)
        if not header:
            raise ParseError(f"expected 'key:' line, got {content.strip()!r}", number, 1)
        key, rest = header.group(1), header.group(2)
        rest_offset = header.start(2)
        if key not in _ALL_KEYS:
            raise ParseError(f"unknown key {key!r}", number, header.start(1) + 1)
        if key in seen and key != "removed":
            raise ParseError(f"duplicate block {key!r} (first on line {seen[key]})", number, header.start(1) + 1)
        seen.setdefault(key, number)

        if key in ("game", "costed"):
            if kind is not None:
                raise ParseError("a file holds exactly one game", number, 1)
            kind = "normal" if key == "game" else "costed"
            name = rest.strip()
            if not name:
                raise ParseError("missing game name", number, len(content) + 1)
            continue
        if kind is None:
            raise ParseError("file must start with 'game:' or 'costed:'", number, 1)

        toks = _tokens(rest, rest_offset)
        if key in ("rows", "cols"):
            if not toks:
                raise ParseError(f"'{key}:' needs at least one action label", number, len(content) + 1)
            labels = tuple(t for _, t in toks)
            for k, (col, label) in enumerate(toks):
                if label in labels[:k]:
                    raise ParseError(f"duplicate action label {label!r}", number, col)
            if key == "rows":
                rows = labels
            else:
                cols = labels
            continue

        if key == "removed":
            if kind != "normal":
                raise ParseError("'removed:' applies to normal games only", number, 1)
            if not toks or len(toks) % 2:
                raise ParseError("'removed:' takes pairs of PLAYER LABEL", number, len(content) + 1)
            for (pc, p), (lc, label) in zip(toks[::2], toks[1::2]):
                player = {"P1": 1, "P2": 2, "1": 1, "2": 2}.get(p.upper())
                if player is None:
                    raise ParseError(f"player must be P1 or P2, got {p!r}", number, pc)
                own = rows if player == 1 else cols
                if own is None or label not in own:
                    raise ParseError(f"player {player} has no action {label!r}", number, lc)
                removed.append((player, label))
            continue

        if rows is None or cols is None:
            raise ParseError(f"'{key}:' must follow 'rows:' and 'cols:'", number, 1)
        expected_keys = _MATRIX_KEYS[kind] + _VECTOR_KEYS[kind]
        if key not in expected_keys:
            raise ParseError(f"'{key}:' is not valid in a {kind} game file", number, header.start(1) + 1)

        if key in _VECTOR_KEYS[kind]:
            size = len(rows) if key == "cost1" else len(cols)
            if len(toks) != size:
                col = toks[size][0] if len(toks) > size else len(content) + 1
                raise ParseError(f"'{key}:' has {len(toks)} entries, expected {size}", number, col)
            blocks[key] = tuple(parse_number(t, number, c) for c, t in toks)
            continue

        if toks:
            raise ParseError(f"matrix rows for '{key}:' start on the next line", number, toks[0][0])
        matrix = []
        for r in range(len(rows)):
            if pos >= len(lines) or _HEADER.match(lines[pos][1]):
                at = lines[pos][0] if pos < len(lines) else number
                raise ParseError(f"'{key}:' has {r} rows, expected {len(rows)}", at, 1)
            row_number, row_text = lines[pos]
            pos += 1
            row_toks = _tokens(row_text, 0)
            if len(row_toks) != len(cols):
                col = row_toks[len(cols)][0] if len(row_toks) > len(cols) else len(row_text) + 1
                raise ParseError(
                    f"'{key}:' row has {len(row_toks)} entries but 'cols:' declares {len(cols)}",
                    row_number,
                    col,
                )
            matrix.append(tuple(parse_number(t, row_number, c) for c, t in row_toks))
        blocks[key] = tuple(matrix)

    if kind is None:
        raise ParseError("empty game file", 1, 1)
    if rows is None or cols is None:
        raise ParseError("missing 'rows:' or 'cols:'", len(text.splitlines()) or 1, 1)
    for key in _MATRIX_KEYS[kind] + _VECTOR_KEYS[kind]:
        if key not in blocks:
            raise ParseError(f"missing '{key}:' block", len(text.splitlines()) or 1, 1)

    gf = GameFile(kind, name, rows, cols, blocks, tuple(removed))
    if kind == "costed" and is_constant_sum(gf.full_game()) is None:
        raise ParseError("costed base (base1 + base2) is not constant-sum", seen["base2"], 1)
    if removed:
        try:
            gf.game()
        except GameError as exc:
            raise ParseError(str(exc), seen["removed"], 1) from None
    return gf


def load_game_file(path) -> GameFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_game_file(text)


def _matrix_lines(matrix) -> list[str]:
    return ["  " + " ".join(str(v) for v in row) for row in matrix]


def serialize_game(obj: Union[BimatrixGame, CostedGame, GameFile]) -> str:
    """Canonical text for a game, costed game or parsed file."""
    if isinstance(obj, BimatrixGame):
        obj = GameFile("normal", obj.name, obj.row_actions, obj.col_actions, {"u1": obj.u1, "u2": obj.u2})
    elif isinstance(obj, CostedGame):
        b = obj.base
        obj = GameFile(
            "costed",
            b.name,
            b.row_actions,
            b.col_actions,
            {"base1": b.u1, "base2": b.u2, "cost1": obj.cost1, "cost2": obj.cost2},
        )
    head = "game" if obj.kind == "normal" else "costed"
    out = [
        f"{head}: {obj.name}",
        "rows: " + " ".join(obj.row_actions),
        "cols: " + " ".join(obj.col_actions),
    ]
    for key in _MATRIX_KEYS[obj.kind]:
        out.append(f"{key}:")
        out.extend(_matrix_lines(obj.blocks[key]))
    for key in _VECTOR_KEYS[obj.kind]:
        out.append(f"{key}: " + " ".join(str(v) for v in obj.blocks[key]))
    if obj.removed:
        out.append("removed: " + " ".join(f"P{p} {a}" for p, a in obj.removed))
    return "\n".join(out) + "\n"
