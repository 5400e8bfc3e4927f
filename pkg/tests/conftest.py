import numpy as np
import pytest
from hypothesis import strategies as st

from fuzzbetween import CrispSet, FiniteUniverse, MembershipFn, WeightedMeasure


@pytest.fixture
def X2():
    return FiniteUniverse.of_size(2)


@pytest.fixture
def X3():
    return FiniteUniverse.of_size(3)


@pytest.fixture
def unit3(X3):
    return WeightedMeasure.counting(X3)


@pytest.fixture
def unit2(X2):
    return WeightedMeasure.counting(X2)


def crisp(universe, *members):
    return CrispSet.from_members(universe, members)


def fn(universe, *values):
    return MembershipFn(universe, values)


# values in [0, 1]; a coarse dyadic grid mixed in so that ties happen
unit_values = st.one_of(
    st.floats(0.0, 1.0, allow_nan=False),
    st.sampled_from([0.0, 0.25, 0.5, 0.75, 1.0]),
)


def vectors(n, elements=unit_values):
    return st.lists(elements, min_size=n, max_size=n).map(np.array)


weights_st = st.floats(0.1, 5.0, allow_nan=False)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
