from fractions import Fraction as F
from itertools import combinations

from hypothesis import assume, given, strategies as st

from weakadv import (
    BimatrixGame,
    certify_equilibrium,
    enumerate_equilibria,
    is_constant_sum,
    iterated_strict_dominance,
    maxmin,
    pure_equilibria,
)
from weakadv.game import expected_payoff

from conftest import games


def _solve(a, b):
    """Plain Fraction Gauss-Jordan; None when singular."""
    n = len(a)
    m = [list(map(F, row)) + [F(r)] for row, r in zip(a, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[r][n] / m[r][r] for r in range(n)]


def _mix_for(payoff_rows, support, size):
    """Strategy on ``support`` making every row in ``payoff_rows`` equal."""
    k = len(support)
    a = [[row[j] for j in support] + [-1] for row in payoff_rows] + [[1] * k + [0]]
    sol = _solve(a, [0] * len(payoff_rows) + [1])
    if sol is None or any(p <= 0 for p in sol[:k]):
        return None
    s = [F(0)] * size
    for j, p in zip(support, sol[:k]):
        s[j] = p
    return tuple(s)


def reference_equilibria(g):
    """Equal-size support enumeration; complete for nondegenerate games."""
    m, n = g.shape
    found = set()
    for k in range(1, min(m, n) + 1):
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                y = _mix_for([g.u1[i] for i in rows], cols, n)
                x = _mix_for([[g.u2[i][j] for i in range(m)] for j in cols], rows, m)
                if x is None or y is None:
                    continue
                v1 = [expected_payoff(g, _unit(i, m), y, 1) for i in range(m)]
                v2 = [expected_payoff(g, x, _unit(j, n), 2) for j in range(n)]
                if all(v1[i] == max(v1) for i in rows) and all(v2[j] == max(v2) for j in cols):
                    found.add((x, y))
    return found


def _unit(i, size):
    return tuple(F(int(k == i)) for k in range(size))


CHICKEN = BimatrixGame.from_payoffs([[1, 1], [3, -10]], [[1, 3], [1, -10]])


def test_chicken_has_three_equilibria():
    es = enumerate_equilibria(CHICKEN)
    assert len(es) == 3 and not es.game_degenerate
    assert sorted(es.payoffs(1)) == [1, 1, 3]
    mixed = [e for e in es if len(e.support1) == 2]
    assert mixed[0].s1 == (F(11, 13), F(2, 13)) == mixed[0].s2


def test_one_by_one():
    es = enumerate_equilibria(BimatrixGame.from_payoffs([[7]], [[-3]]))
    assert [e.payoffs for e in es] == [(7, -3)]


def test_all_zero_game_lists_the_pure_corners():
    es = enumerate_equilibria(BimatrixGame.from_payoffs([[0, 0], [0, 0]], [[0, 0], [0, 0]]))
    assert es.game_degenerate
    assert len(es) == 4 and all(len(e.support1) == len(e.support2) == 1 for e in es)
    assert all(e.degenerate for e in es)


def test_dominance_solvable_game():
    g = BimatrixGame.from_payoffs([[3, 0], [5, 1]], [[3, 5], [0, 1]])  # prisoner's dilemma
    assert iterated_strict_dominance(g) == ((1,), (1,))
    assert [e.payoffs for e in enumerate_equilibria(g)] == [(1, 1)]


def test_certify_rejects_non_equilibrium():
    es = enumerate_equilibria(CHICKEN)
    good = es[0]
    assert certify_equilibrium(CHICKEN, good)
    bad = type(good)(_unit(0, 2), _unit(0, 2), (1, 1), (0,), (0,), False)
    assert not certify_equilibrium(CHICKEN, bad)


@given(games(max_rows=4, max_cols=4))
def test_every_listed_equilibrium_certifies(g):
    es = enumerate_equilibria(g)
    assert len(es) >= 1
    assert all(certify_equilibrium(g, e) for e in es)
    assert len(es.profiles()) == len(es)


@given(games(max_rows=4, max_cols=4))
def test_pure_equilibria_are_listed(g):
    listed = enumerate_equilibria(g).profiles()
    assert {e.profile for e in pure_equilibria(g)} <= listed


@given(games(max_rows=4, max_cols=4, values=st.integers(-20, 20)))
def test_matches_support_enumeration_when_nondegenerate(g):
    es = enumerate_equilibria(g)
    assume(not es.game_degenerate)
    assert es.profiles() == reference_equilibria(g)
    assert len(es) % 2 == 1


@given(games(max_rows=3, max_cols=3))
def test_worst_payoff_bounds_every_reference_equilibrium(g):
    es = enumerate_equilibria(g)
    for p in (1, 2):
        low, high = min(es.payoffs(p)), max(es.payoffs(p))
        for x, y in reference_equilibria(g):
            assert low <= expected_payoff(g, x, y, p) <= high


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_constant_sum_equilibria_pay_the_maxmin(m, n, data):
    u1 = data.draw(st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=m, max_size=m))
    g = BimatrixGame.from_payoffs(u1, [[3 - v for v in row] for row in u1])
    assert is_constant_sum(g) == 3
    v1, v2 = maxmin(g, 1).value, maxmin(g, 2).value
    assert v1 + v2 == 3
    assert all(e.payoffs == (v1, v2) for e in enumerate_equilibria(g))
