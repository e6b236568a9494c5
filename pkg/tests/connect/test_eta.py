"""Tests for eta: C -> GC-(g1) (x) GC-(g2)."""

import pytest

from itertools import chain, islice

from gridhom.algebra import ModuleElement
from gridhom.common import CanonicalCorner, SizeMismatch, StateClass
from gridhom.connect import ConnectedSum, eta, eta_composite, eta_failures
from gridhom.homology import module_structure
from gridhom.legendrian import canonical_state
from gridhom.report import VerificationLog
from gridhom.states import State


class TestConnectedSum:
    """Test assembling g# from two summands."""

    def test_diagram(self, unknot_sum, unknot_sum6, unknot2b):
        """Test the normalized summands and the connect diagram."""
        assert unknot_sum.diagram == unknot_sum6
        assert unknot_sum.g1 == unknot_sum.g2 == unknot2b
        assert (unknot_sum.n, unknot_sum.size) == (3, 6)

    def test_variable_map(self, unknot_sum):
        """Test that the two middle O's go to the identified variable."""
        vm = unknot_sum.variable_map
        assert vm[3] == vm[4] == unknot_sum.identified
        assert set(vm.values()) == set(unknot_sum.target.variables) == {1, 2, 4}

    def test_target_size(self, unknot_sum):
        """Test that the target pairs the states of the two destabilized diagrams."""
        assert len(unknot_sum.target) == 4
        assert len(unknot_sum.c) == 40

    def test_size_mismatch(self, unknot2, trefoil_right):
        """Test that summands of different sizes are rejected."""
        with pytest.raises(SizeMismatch, match="summand sizes differ"):
            ConnectedSum(unknot2, trefoil_right)


class TestEta:
    """Test the class rules for eta."""

    def test_canonical_state(self, unknot_sum, x_plus):
        """Test that x+(g#) goes to x+(g1) (x) x+(g2)."""
        expected = unknot_sum.target_generator(State((1, 0)), State((1, 0)))
        assert unknot_sum.eta_state(x_plus) == expected

    def test_ad1_goes_to_zero(self, unknot_sum):
        """Test that AD_1 states are sent to zero."""
        c = unknot_sum.c
        for g in c.ids_of(StateClass.AD1):
            assert unknot_sum.eta_state(c.states[g]) == ModuleElement.zero()

    def test_rejects_states_outside_c(self, unknot_sum):
        """Test that eta is only defined on the generators of C."""
        with pytest.raises(ValueError, match="is not a generator of C"):
            unknot_sum.eta_state(State((0, 1, 5, 3, 4, 2)))

    def test_chain_map(self, unknot_sum):
        """Test that eta commutes with the differentials on every generator."""
        assert eta_failures(unknot_sum, unknot_sum.c.states) == []

    def test_eta_builds_and_verifies(self, unknot2):
        """Test the checked construction of eta."""
        log = VerificationLog()
        f = eta(unknot2, unknot2, log=log)
        assert len(f.source) == 40
        assert f.chain_map_failures() == []
        assert log.events[-1].event_type == "PASS"
        assert log.events[-1].check == "eta"

    def test_matches_composite(self, unknot_sum):
        """Test that the class rules agree with the target part of D_SE (x) D_NW."""
        for x in unknot_sum.c.states:
            assert unknot_sum.eta_state(x) == unknot_sum.eta_composite_state(x)

    def test_composite_map(self, unknot2):
        """Test the composite map as a whole."""
        f = eta_composite(unknot2, unknot2)
        g = eta(unknot2, unknot2, verify=False)
        assert f.images == g.images

    def test_s0_images_nonzero_on_ii(self, unknot_sum):
        """Test that II states map to single product generators."""
        c = unknot_sum.c
        for g in c.ids_of(StateClass.II):
            assert len(unknot_sum.eta_state(c.states[g])) == 1


class TestUnknotTrefoilSum:
    """Chain-level checks on the 12x12 connect diagram of unknot5 and trefoil5."""

    def test_sizes(self, unknot_trefoil_sum):
        """Test the sizes of g# and the target."""
        assert unknot_trefoil_sum.size == 12
        assert unknot_trefoil_sum.n == 6
        assert len(unknot_trefoil_sum.target) == 120 * 120

    @pytest.mark.parametrize("which", [CanonicalCorner.PLUS, CanonicalCorner.MINUS])
    def test_canonical_states(self, unknot_trefoil_sum, which):
        """Test that x+-(g#) goes to x+-(g1) (x) x+-(g2)."""
        cs = unknot_trefoil_sum
        x = canonical_state(cs.diagram, which).state
        expected = cs.target_generator(
            canonical_state(cs.g1, which).state, canonical_state(cs.g2, which).state
        )
        assert cs.eta_state(x) == expected

    def test_chain_map_on_first_generators(self, unknot_trefoil_sum):
        """Test eta on the first AD_1 and S_0 generators."""
        geometry = unknot_trefoil_sum.geometry
        states = list(islice(geometry.ad1_states(), 200)) + list(islice(geometry.s0_states(), 200))
        assert eta_failures(unknot_trefoil_sum, states) == []

    @pytest.mark.slow
    def test_chain_map(self, unknot_trefoil_sum):
        """Test that eta commutes with the differentials on every generator of C."""
        geometry = unknot_trefoil_sum.geometry
        states = chain(geometry.ad1_states(), geometry.s0_states())
        assert eta_failures(unknot_trefoil_sum, states) == []

    @pytest.mark.slow
    def test_target_tau(self, unknot_trefoil_sum):
        """Test that the tower of the target sits at tau = 0 + 1."""
        assert module_structure(unknot_trefoil_sum.target, symmetric=False).tau == 1
