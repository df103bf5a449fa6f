from fractions import Fraction as F
from pathlib import Path

import pytest

from weakadv.cli import main
from weakadv.gamefile import parse_game_file, serialize_game
from weakadv.scenarios import CHICKEN, COSTSUM

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", ["factoring", "subsidy", "costsum", "signaling"])
def test_scenario_golden_output(capsys, name):
    code, out, _ = run(capsys, "scenario", name, "--format", "machine")
    assert code == 0
    assert out == (GOLDEN / f"scenario-{name}.txt").read_text()


def test_factoring_headline(capsys):
    _, out, _ = run(capsys, "scenario", "factoring", "--format", "machine")
    assert "VERDICT HURT" in out.splitlines()
    assert "WORST before=3 after=1" in out.splitlines()


def test_human_output_is_readable(capsys):
    code, out, _ = run(capsys, "scenario", "factoring")
    assert code == 0 and "verdict: HURT" in out and "3/3" not in out


@pytest.fixture
def chicken_file(tmp_path):
    p = tmp_path / "chicken.game"
    p.write_text(serialize_game(CHICKEN))
    return p


def test_solve(capsys, chicken_file):
    code, out, _ = run(capsys, "solve", str(chicken_file), "--format", "machine")
    assert code == 0
    assert "EQUILIBRIA count=3 game_degenerate=false" in out
    assert "s1=11/13,2/13 s2=11/13,2/13" in out


def test_maxmin(capsys, chicken_file):
    code, out, _ = run(capsys, "maxmin", str(chicken_file), "--player", "1", "--format", "machine")
    assert code == 0 and "MAXMIN player=1 value=1 strategy=1,0" in out


def test_htransform(capsys, tmp_path):
    p = tmp_path / "c.game"
    p.write_text(serialize_game(COSTSUM))
    code, out, _ = run(capsys, "htransform", str(p))
    assert code == 0 and out.startswith("# constant-sum 6\n")
    h = parse_game_file(out).game()
    assert h.u1 == ((F(9, 2), 4), (4, F(9, 2)))


def test_htransform_needs_costed_file(capsys, chicken_file):
    code, _, err = run(capsys, "htransform", str(chicken_file))
    assert code == 2 and "not a costed game" in err


def test_compare_exit_codes(capsys, tmp_path, chicken_file):
    before = tmp_path / "before.game"
    before.write_text(serialize_game(CHICKEN.remove_actions(1, ["factor"])))
    code, out, _ = run(capsys, "compare", str(before), str(chicken_file), "--player", "1", "--format", "machine")
    assert code == 0 and "VERDICT HURT" in out
    flat = tmp_path / "flat.game"
    flat.write_text("game: flat\nrows: a b\ncols: x y\nu1:\n  0 0\n  0 0\nu2:\n  0 0\n  0 0\n")
    code, out, _ = run(capsys, "compare", str(flat), str(flat), "--player", "1", "--format", "machine")
    assert code == 3 and "VERDICT INDETERMINATE" in out and "NOTE " in out
    code, out, _ = run(capsys, "compare", str(flat), str(flat), "--player", "1", "--allow-degenerate")
    assert code == 0


def test_missing_file_and_parse_error(capsys, tmp_path):
    code, out, err = run(capsys, "solve", str(tmp_path / "nope.game"))
    assert code == 2 and out == "" and "cannot read" in err
    bad = tmp_path / "bad.game"
    bad.write_text("game: g\nrows: a\ncols: x y\nu1:\n  1\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 2 and "line 5" in err


def test_verify_clean_run(capsys):
    code, out, _ = run(
        capsys, "verify", "theorem1", "--trials", "500", "--seed", "7", "--rows", "3", "--cols", "3", "--format", "machine"
    )
    assert code == 0
    assert out.splitlines()[-1] == "VIOLATIONS 0"
    assert out.splitlines()[0] == "PROPERTY name=theorem1 seed=7 rows=3 cols=3 range=-5,5 trials=500"


def test_verify_violation_exit_and_dump(capsys, tmp_path):
    dump = tmp_path / "dump"
    code, out, _ = run(
        capsys, "verify", "theorem2", "--two-sided", "--trials", "3", "--format", "machine", "--dump-dir", str(dump)
    )
    assert code == 4
    assert "VIOLATION trial=-1" in out
    names = sorted(p.name for p in dump.iterdir())
    assert names[:2] == ["theorem2-trial-1-0.game", "theorem2-trial-1-1.game"]
    assert parse_game_file((dump / names[0]).read_text()).kind == "costed"


def test_two_sided_only_for_theorem2(capsys):
    code, _, err = run(capsys, "verify", "oddness", "--two-sided", "--trials", "1")
    assert code == 2 and "theorem2" in err


def test_search(capsys, tmp_path):
    code, out, _ = run(
        capsys, "search", "--seed", "2013", "--trials", "10", "--format", "machine", "--dump-dir", str(tmp_path)
    )
    assert code == 0
    assert out.splitlines()[1] == "HIT trial=3 before_worst=4 after_worst=24/7"
    assert out.splitlines()[-1] == "HITS 3"
    assert (tmp_path / "hurt-trial3-before.game").exists()


def test_trials_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("WEAKADV_TRIALS", "4")
    _, out, _ = run(capsys, "verify", "oddness", "--format", "machine")
    assert "trials=4" in out.splitlines()[0]


def test_scenario_export(capsys, tmp_path):
    code, _, _ = run(capsys, "scenario", "costsum", "--export-dir", str(tmp_path))
    assert code == 0
    gf = parse_game_file((tmp_path / "costsum-costed-before.game").read_text())
    assert gf.costed() == COSTSUM


def test_bad_player_is_usage_error(capsys, chicken_file):
    with pytest.raises(SystemExit) as info:
        main(["maxmin", str(chicken_file), "--player", "3"])
    assert info.value.code == 2
