from fractions import Fraction as F

import pytest

from fuzzyhahn import FuzzySet, Universe, coordinatewise_measure, full_cube


@pytest.fixture
def ab():
    return Universe(["a", "b"])


@pytest.fixture
def cube2(ab):
    return full_cube(2, ab)


@pytest.fixture
def cube1(ab):
    return full_cube(1, ab)


@pytest.fixture
def t_minus_t(cube2):
    """nu(mu) = mu(a) - mu(b) on the q=2 square."""
    return coordinatewise_measure(cube2, [lambda t: t, lambda t: -t])


def fs(u, q, *grades):
    return FuzzySet.from_grades(u, q, [F(g) for g in grades])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
