"""Shared degrees and moment constraints used across the suite."""

import sys
from fractions import Fraction

import pytest

from tropical_refine import Degree, MomentVector


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Replay the acceptance verdicts after the run; capture would otherwise
    swallow the one [PASS]/[FAIL] line each criterion prints."""
    mod = (sys.modules.get("test_acceptance")
           or sys.modules.get("tests.test_acceptance"))
    verdicts = getattr(mod, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.line(line)


@pytest.fixture
def triangle() -> Degree:
    """Smallest degree: one curve, one vertex, multiplicity one."""
    return Degree(((-1, 0), (0, -1), (1, 1)))


@pytest.fixture
def square() -> Degree:
    return Degree(((-1, 0), (1, 0), (0, -1), (0, 1)))


@pytest.fixture
def conic() -> Degree:
    """Six primitive ends, two per direction of the triangle fan."""
    return Degree(((-1, 0), (-1, 0), (0, -1), (0, -1), (1, 1), (1, 1)))


@pytest.fixture
def conic_merged() -> Degree:
    """The conic with its two (-1,0) ends merged into one weight-2 end."""
    return Degree(((0, -1), (0, -1), (1, 1), (1, 1), (-2, 0)))


@pytest.fixture
def doubled_quad() -> Degree:
    """Four ends, one of weight 2; the smallest degree with s = 1."""
    return Degree(((-2, 0), (0, -1), (1, 1), (1, 0)))


@pytest.fixture
def triangle_mu() -> MomentVector:
    return MomentVector((Fraction(3), Fraction(2)))


@pytest.fixture
def square_mu() -> MomentVector:
    return MomentVector((Fraction(3), Fraction(2), Fraction(-7)))


@pytest.fixture
def doubled_quad_mu() -> MomentVector:
    return MomentVector((Fraction(1), Fraction(1), Fraction(10)))
