"""Tests for gridhom.connect.classify."""

import pytest

from gridhom.common import NotAConnectDiagram, StateClass
from gridhom.connect import BC0, ConnectGeometry, class_sizes, classify, summand_diagrams
from gridhom.states import State


class TestConnectGeometry:
    """Test the block layout of a connect diagram."""

    def test_distinguished_points(self, geometry):
        """Test a, b, c and d on the 6x6 diagram."""
        assert geometry.n == 3
        assert (geometry.a, geometry.b, geometry.c, geometry.d) == ((0, 0), (3, 0), (0, 3), (3, 3))

    def test_rejects_odd_size(self, trefoil_right):
        """Test that odd diagrams are not connect diagrams."""
        with pytest.raises(NotAConnectDiagram, match="even size >= 4"):
            ConnectGeometry(trefoil_right)

    def test_rejects_small(self, unknot2):
        """Test that 2x2 diagrams are not connect diagrams."""
        with pytest.raises(NotAConnectDiagram, match="even size >= 4"):
            ConnectGeometry(unknot2)

    def test_blocks(self, geometry):
        """Test sorting the points of a state into blocks."""
        blocks = geometry.blocks(State((0, 1, 5, 3, 4, 2)))
        assert blocks.k == 2
        assert blocks.x11 == ((2, 5),)
        assert blocks.x22 == ((5, 2),)

    def test_summand_diagrams(self, unknot_sum6, stabilized_left3, stabilized_right3):
        """Test that undoing the O switch recovers both prepared summands."""
        assert summand_diagrams(unknot_sum6) == (stabilized_left3, stabilized_right3)


class TestStateClasses:
    """Test the classes of states of g#."""

    def test_class_sizes(self, unknot_sum6):
        """Test the class counts over all 720 states."""
        sizes = class_sizes(unknot_sum6)
        assert sizes == {
            StateClass.AD1: 4,
            StateClass.S_1: 320,
            StateClass.S_K: 360,
            StateClass.II: 4,
            StateClass.IN: 8,
            StateClass.NI: 8,
            StateClass.NN: 16,
        }
        assert sum(sizes.values()) == 720

    def test_canonical_states_are_ii(self, unknot_sum6, x_plus):
        """Test that the diagonal-block state holding b and c is in II."""
        blocks, cls = classify(unknot_sum6, x_plus)
        assert cls is StateClass.II is BC0
        assert blocks.k == 0

    def test_off_diagonal_state(self, geometry):
        """Test a state with two points in the off-diagonal blocks."""
        assert geometry.state_class(State((0, 1, 5, 3, 4, 2))) is StateClass.S_K

    def test_in_c(self):
        """Test which classes span C."""
        assert {cls for cls in StateClass if cls.in_c} == {
            StateClass.AD1,
            StateClass.II,
            StateClass.IN,
            StateClass.NI,
            StateClass.NN,
        }
        assert not StateClass.AD1.in_s0


class TestSplitJoin:
    """Test splitting S_0 states into summand states."""

    def test_split(self, geometry, x_plus):
        """Test the summand states of x+."""
        assert geometry.split(x_plus) == (State((0, 1, 2)), State((0, 1, 2)))

    def test_join_inverts_split(self, geometry):
        """Test that join undoes split on every S_0 state."""
        for x in geometry.s0_states():
            assert geometry.join(*geometry.split(x)) == x

    def test_split_rejects_off_diagonal(self, geometry):
        """Test that only S_0 states split."""
        with pytest.raises(ValueError, match="not in S_0"):
            geometry.split(State((0, 1, 5, 3, 4, 2)))

    def test_c_states(self, geometry):
        """Test that the generators of C are AD_1 then S_0."""
        states = geometry.c_states()
        assert len(states) == 40
        assert len(set(states)) == 40
        classes = [geometry.state_class(x) for x in states]
        assert classes[:4] == [StateClass.AD1] * 4
        assert all(cls.in_s0 for cls in classes[4:])
