"""Shared pytest fixtures for test suite."""

import pytest

from gridhom import load_fixture


@pytest.fixture
def unknot2():
    """The 2x2 unknot with O's on the anti-diagonal."""
    return load_fixture("unknot2")


@pytest.fixture
def unknot2b():
    """The 2x2 unknot with X's on the anti-diagonal."""
    return load_fixture("unknot2b")


@pytest.fixture
def trefoil_right():
    """A 5x5 right-handed trefoil."""
    return load_fixture("trefoil5")


@pytest.fixture
def trefoil_left():
    """A 5x5 left-handed trefoil."""
    return load_fixture("trefoil5_left")


@pytest.fixture
def stabilized_left3():
    """unknot2 normalized and prepared as a left summand (SE stabilization)."""
    return load_fixture("stabilized_left3")


@pytest.fixture
def stabilized_right3():
    """unknot2 normalized and prepared as a right summand (NW stabilization)."""
    return load_fixture("stabilized_right3")


@pytest.fixture
def stabilized_left4():
    """A 4x4 unknot with an SE stabilization."""
    return load_fixture("stabilized_left4")


@pytest.fixture
def unknot_sum6():
    """The 6x6 connect diagram of two copies of unknot2."""
    return load_fixture("unknot_sum6")


@pytest.fixture
def unknot5():
    """A 5x5 staircase unknot, the left summand of the 12x12 connected sum."""
    return load_fixture("unknot5")
