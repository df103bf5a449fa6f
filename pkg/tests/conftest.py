from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from weakadv import BimatrixGame

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F = Fraction

small_ints = st.integers(-6, 6)


@st.composite
def games(draw, max_rows=3, max_cols=3, values=small_ints):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    u1 = draw(st.lists(st.lists(values, min_size=n, max_size=n), min_size=m, max_size=m))
    u2 = draw(st.lists(st.lists(values, min_size=n, max_size=n), min_size=m, max_size=m))
    return BimatrixGame.from_payoffs(u1, u2)


@st.composite
def mixed(draw, size):
    weights = draw(st.lists(st.integers(0, 5), min_size=size, max_size=size).filter(any))
    total = sum(weights)
    return tuple(F(w, total) for w in weights)


@pytest.fixture
def pennies():
    return BimatrixGame.from_payoffs([[1, -1], [-1, 1]], [[-1, 1], [1, -1]], name="pennies")
