from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from weakadv import BimatrixGame, maxmin, security_level
from weakadv.simplex import UnboundedError, maximize

from conftest import games


def test_textbook_lp():
    sol = maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert sol.value == 36
    assert list(sol.x) == [2, 6]


def test_bland_rule_terminates_on_cycling_example():
    # Classic instance on which the largest-coefficient rule cycles forever.
    c = [F(3, 4), -20, F(1, 2), -6]
    a = [[F(1, 4), -8, -1, 9], [F(1, 2), -12, F(-1, 2), 3], [0, 0, 1, 0]]
    sol = maximize(c, a, [0, 0, 1])
    assert sol.value == F(5, 4)
    assert list(sol.x) == [1, 0, 1, 0]


def test_unbounded():
    with pytest.raises(UnboundedError):
        maximize([1, 1], [[1, -1]], [1])


def test_duals_certify_optimum():
    a = [[1, 0], [0, 2], [3, 2]]
    b = [4, 12, 18]
    sol = maximize([3, 5], a, b)
    assert all(y >= 0 for y in sol.duals)
    assert sum(y * v for y, v in zip(sol.duals, b)) == sol.value
    for j, cj in enumerate([3, 5]):
        assert sum(sol.duals[i] * a[i][j] for i in range(3)) >= cj


def test_maxmin_matching_pennies(pennies):
    r = maxmin(pennies, 1)
    assert r.value == 0
    assert r.strategy == (F(1, 2), F(1, 2))


def test_maxmin_single_row():
    g = BimatrixGame.from_payoffs([[4, -2, 7]], [[0, 0, 0]])
    assert maxmin(g, 1).value == -2
    assert maxmin(g, 2).value == 0


def test_maxmin_costsum_base_player1():
    g = BimatrixGame.from_payoffs([[6, 2], [4, 1]], [[0, 4], [2, 5]])
    r = maxmin(g, 1)
    assert r.value == 2 and r.strategy == (1, 0)
    grid = [F(k, 200) for k in range(201)]
    assert max(security_level(g, 1, (p, 1 - p)) for p in grid) == 2


@given(games(max_rows=4, max_cols=4), st.sampled_from([1, 2]))
def test_maxmin_has_minimax_certificate(g, player):
    """The opponent can hold the player to the maxmin value: solve the
    opponent's problem in the zero-sum game built from the player's payoffs."""
    r = maxmin(g, player)
    assert security_level(g, player, r.strategy) == r.value
    own = g.payoffs(player)
    neg = tuple(tuple(-v for v in row) for row in own)
    zero_sum = g.with_payoffs(3 - player, neg)
    punish = maxmin(zero_sum, 3 - player)
    assert punish.value == -r.value
