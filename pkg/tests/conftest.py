import pytest
from hypothesis import strategies as st
from fractions import Fraction

from permcheb.exact import MPoly

small_fractions = st.builds(
    Fraction, st.integers(-5, 5), st.integers(1, 4)
)


@st.composite
def polys(draw, variables=("s", "t", "u"), max_terms=4, max_deg=3):
    """Small random polynomials."""
    n = draw(st.integers(0, max_terms))
    total = MPoly()
    for _ in range(n):
        powers = {v: draw(st.integers(0, max_deg)) for v in variables}
        total = total + MPoly.monomial(powers, draw(small_fractions))
    return total


@pytest.fixture
def s():
    return MPoly.var("s")


@pytest.fixture
def t():
    return MPoly.var("t")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results.values():
            terminalreporter.write_line(line)
