from fractions import Fraction as F

from hypothesis import given, strategies as st

from weakadv.linalg import integer_scale, solve_integer_system, solve_rational_system


def reference_solve(a, b):
    """Textbook Gaussian elimination over Fractions."""
    n = len(a)
    m = [[F(v) for v in row] + [F(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[r][n] / m[r][r] for r in range(n)]


square = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.integers(-9, 9), min_size=n, max_size=n),
    )
)


@given(square)
def test_integer_solver_matches_reference(system):
    a, b = system
    ref = reference_solve(a, b)
    got = solve_integer_system(a, b)
    if ref is None:
        assert got is None
    else:
        d, nums = got
        assert d > 0
        assert [F(x, d) for x in nums] == ref


@given(square, st.integers(1, 12))
def test_rational_solver_scale_invariant(system, k):
    a, b = system
    scaled = [[F(v, k) for v in row] for row in a]
    assert solve_rational_system(scaled, [F(v, k) for v in b]) == reference_solve(a, b)


def test_integer_scale():
    assert integer_scale([F(1, 2), F(2, 3), 5]) == 6
    assert integer_scale([]) == 1


def test_singular_system():
    assert solve_integer_system([[1, 2], [2, 4]], [1, 2]) is None
