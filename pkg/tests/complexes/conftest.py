"""Test fixtures for complexes subsystem tests."""

import pytest

from gridhom.complexes import build_minus_complex


@pytest.fixture
def unknot_complex(unknot2):
    """GC-(unknot2) over U1, U2: [0,1] at (0, 0) and [1,0] at (-1, -1)."""
    return build_minus_complex(unknot2)


@pytest.fixture
def trefoil_complex(trefoil_right):
    """GC-(trefoil5) over U1..U5."""
    return build_minus_complex(trefoil_right)
