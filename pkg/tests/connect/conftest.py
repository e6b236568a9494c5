"""Test fixtures for connect subsystem tests."""

import pytest

from gridhom import load_fixture
from gridhom.common import CanonicalCorner
from gridhom.connect import ConnectedSum, ConnectGeometry, build_C
from gridhom.legendrian import canonical_state


@pytest.fixture(scope="module")
def unknot_sum():
    """unknot2 # unknot2 with its summands, destabilizations and target."""
    unknot = load_fixture("unknot2")
    return ConnectedSum(unknot, unknot)


@pytest.fixture(scope="module")
def unknot_c():
    """The subcomplex C of GC-(unknot_sum6)."""
    return build_C(load_fixture("unknot_sum6"))


@pytest.fixture
def geometry(unknot_sum6):
    return ConnectGeometry(unknot_sum6)


@pytest.fixture
def x_plus(unknot_sum6):
    """x+ of the 6x6 connect diagram, read off its X markings."""
    return canonical_state(unknot_sum6, CanonicalCorner.PLUS).state


@pytest.fixture(scope="module")
def unknot_trefoil_sum():
    """unknot5 # trefoil5, a 12x12 connect diagram."""
    return ConnectedSum(load_fixture("unknot5"), load_fixture("trefoil5"))
