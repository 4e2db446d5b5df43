from fractions import Fraction

import pytest
from hypothesis import strategies as st

from welfare_axioms.core import UtilityProfile, grid_profiles

CORPUS_GRID = (0, 1, 2)


def P(rows, **kw):
    return UtilityProfile(rows, **kw)


def corpus_2x2():
    return list(grid_profiles(CORPUS_GRID, 2, 2))


@pytest.fixture(scope="session")
def corpus():
    return corpus_2x2()


@pytest.fixture(scope="session")
def default_table():
    from welfare_axioms.theorems import independence_table

    return independence_table()


rationals = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=4)
)
weights = st.builds(Fraction, st.integers(1, 9), st.just(10))


@st.composite
def profiles(draw, n=None, m=None):
    n = n or draw(st.integers(2, 4))
    m = m or draw(st.integers(1, 4))
    rows = draw(st.lists(st.lists(rationals, min_size=m, max_size=m), min_size=n, max_size=n))
    return UtilityProfile(rows)


@st.composite
def profile_pairs(draw):
    n = draw(st.integers(2, 4))
    m = draw(st.integers(1, 4))
    return draw(profiles(n, m)), draw(profiles(n, m))


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(range(n))))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
