from fractions import Fraction

import pytest
from hypothesis import strategies as st

from frobend.chow import GradedElement, GradedRing

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))


def graded_elements(ring: GradedRing, unit: bool = False):
    """Random elements of ``ring``; with ``unit=True`` the constant term is 1."""
    monos = [m for k in range(ring.bound + 1) for m in ring.monomials(k)]

    def build(coeffs):
        terms = dict(zip(monos, coeffs))
        if unit:
            terms[ring.one_monomial] = Fraction(1)
        return GradedElement(ring, terms)

    return st.lists(small_fractions, min_size=len(monos), max_size=len(monos)).map(build)


@pytest.fixture
def d_ring3():
    return GradedRing.from_pairs([("d1", 1), ("d2", 2), ("d3", 3)], 3)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
