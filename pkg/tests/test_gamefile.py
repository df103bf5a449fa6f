from fractions import Fraction as F

import pytest
from hypothesis import given

from weakadv import ParseError, load_game_file, parse_game_file, serialize_game
from weakadv.gamefile import parse_number
from weakadv.scenarios import CHICKEN, COSTSUM

from conftest import games

CHICKEN_TEXT = """\
# a comment line
game: chicken
rows: factor dont
cols: factor dont
u1:
  1 1
  3 -10     # trailing comment
u2:
  1 3
  1 -10
removed: P1 factor
"""


def test_parse_normal_file_with_removal():
    gf = parse_game_file(CHICKEN_TEXT)
    assert gf.full_game() == CHICKEN
    g = gf.game()
    assert g.row_actions == ("dont",) and g.u1 == ((3, -10),)


@pytest.mark.parametrize(
    "token, value",
    [("0.1", F(1, 10)), ("22/4", F(11, 2)), ("-3", F(-3)), ("+.5", F(1, 2)), ("1e2", F(100)), ("2.5E-1", F(1, 4))],
)
def test_numbers_are_exact(token, value):
    assert parse_number(token) == value


@pytest.mark.parametrize("token", ["1/0", "abc", "1//2", "0x10", "nan", "inf", "1.2.3"])
def test_bad_numbers(token):
    with pytest.raises(ParseError):
        parse_number(token)


def test_canonical_form_normalizes_fractions():
    text = "game: g\nrows: a\ncols: x y\nu1:\n  22/4 0.25\nu2:\n  1 2\n"
    assert "  11/2 1/4" in serialize_game(parse_game_file(text))


@given(games(max_rows=4, max_cols=4))
def test_round_trip(g):
    text = serialize_game(g)
    again = parse_game_file(text)
    assert again.game() == g
    assert serialize_game(again) == text


def test_costed_round_trip():
    text = serialize_game(COSTSUM)
    gf = parse_game_file(text)
    assert gf.kind == "costed" and gf.costed() == COSTSUM
    assert serialize_game(gf) == text


def _error(text):
    with pytest.raises(ParseError) as info:
        parse_game_file(text)
    return info.value


def test_wrong_row_length_points_at_row():
    err = _error("game: g\nrows: a b\ncols: x y\nu1:\n  1 2\n  3 4 5\nu2:\n  0 0\n  0 0\n")
    assert (err.line, err.column) == (6, 7)
    assert "line 6, column 7" in str(err)


def test_diagnostics():
    cases = {
        "game: g\nrows: a\ncols: x\nu3:\n": (4, 1),
        "game: g\nrows: a a\n": (2, 9),
        "game: g\nu1:\n": (2, 1),
        "game: g\nrows: a\ncols: x\nu1:\n  q\n": (5, 3),
        "game: g\nrows: a\ncols: x\nu1:\n  1\nu2:\n  1\nremoved: P3 a\n": (8, 10),
        "game: g\nrows: a\nrows: b\n": (3, 1),
        "": (1, 1),
    }
    for text, where in cases.items():
        err = _error(text)
        assert (err.line, err.column) == where, text


def test_costed_base_must_be_constant_sum():
    text = "costed: c\nrows: a\ncols: x y\nbase1:\n  1 2\nbase2:\n  0 0\ncost1: 0\ncost2: 0 0\n"
    assert "constant-sum" in str(_error(text))


def test_removing_every_action_is_an_error():
    err = _error("game: g\nrows: a\ncols: x\nu1:\n  1\nu2:\n  1\nremoved: P1 a\n")
    assert err.line == 8


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_game_file(tmp_path / "absent.game")
