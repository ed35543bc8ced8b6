from fractions import Fraction

import pytest
from hypothesis import strategies as st

from umbralkit import Poly, Series

small_rats = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def series_st(draw, precision=6, min_order=0):
    coeffs = draw(st.lists(small_rats, min_size=precision, max_size=precision))
    for i in range(min_order):
        coeffs[i] = Fraction(0)
    return Series(coeffs)


@st.composite
def delta_series_st(draw, precision=8):
    f = draw(series_st(precision))
    lead = draw(small_rats.filter(lambda c: c != 0))
    return Series([0, lead] + list(f.coeffs[2:]))


@st.composite
def poly_st(draw, max_degree=5):
    return Poly(draw(st.lists(small_rats, max_size=max_degree + 1)))


@pytest.fixture
def F():
    return Fraction


# one line per acceptance criterion, replayed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
