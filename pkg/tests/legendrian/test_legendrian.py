"""Tests for gridhom.legendrian."""

from gridhom.common import CanonicalCorner, CheckStatus, ClassKind
from gridhom.legendrian import additivity_check, canonical_state, lambda_class, theta
from gridhom.report import VerificationLog
from gridhom.states import State


class TestCanonicalStates:
    """Test x+ and x-."""

    def test_unknot(self, unknot2):
        """Test that both corners give [0,1] on the 2x2 unknot."""
        assert canonical_state(unknot2, CanonicalCorner.PLUS).state == State((0, 1))
        assert canonical_state(unknot2, CanonicalCorner.MINUS).state == State((0, 1))

    def test_right_trefoil(self, trefoil_right):
        """Test the canonical states of the right-handed trefoil."""
        assert canonical_state(trefoil_right, CanonicalCorner.MINUS).state == State((2, 1, 0, 4, 3))
        assert canonical_state(trefoil_right, CanonicalCorner.PLUS).state == State((4, 3, 2, 1, 0))

    def test_minus_is_x_rows(self, trefoil_left):
        """Test that x- takes the southwest corner of every X."""
        assert canonical_state(trefoil_left, CanonicalCorner.MINUS).state == State(trefoil_left.x_rows)

    def test_str(self, unknot2):
        """Test the printed form."""
        assert str(canonical_state(unknot2, CanonicalCorner.MINUS)) == "x- = [0,1]"


class TestLambda:
    """Test locating the Legendrian invariants in homology."""

    def test_unknot(self, unknot2):
        """Test that lambda+ of the 2x2 unknot generates the tower."""
        lam = lambda_class(unknot2, CanonicalCorner.PLUS)
        assert lam.location.kind is ClassKind.NON_TORSION
        assert lam.location.tower_power == 0
        assert not lam.is_zero
        assert not lam.is_torsion
        assert str(lam) == "lambda+: U^0 * tower at (0, 0)"

    def test_left_trefoil(self, trefoil_left):
        """Test lambda- of the left-handed trefoil at the top of its tower."""
        lam = lambda_class(trefoil_left, CanonicalCorner.MINUS)
        assert lam.canonical.state == State((3, 4, 0, 1, 2))
        assert lam.location.kind is ClassKind.NON_TORSION
        assert lam.bigrading.maslov == 2
        assert lam.bigrading.alexander == 1
        assert lam.location.tower_power == 0

    def test_canonical_states_are_cycles(self, trefoil_right):
        """Test that both canonical states of the right-handed trefoil are cycles."""
        for which in CanonicalCorner:
            lam = lambda_class(trefoil_right, which)
            assert lam.canonical.which is which
            assert lam.bigrading is not None

    def test_theta_is_lambda_plus(self, trefoil_left):
        """Test that theta is the lambda+ class."""
        t = theta(trefoil_left)
        assert t.canonical.which is CanonicalCorner.PLUS
        assert t.location == lambda_class(trefoil_left, CanonicalCorner.PLUS).location


class TestAdditivity:
    """Test the behaviour of the canonical states under connected sum."""

    def test_unknot_sum(self, unknot2):
        """Test all checks on unknot # unknot, homology included."""
        report = additivity_check(unknot2, unknot2)
        assert report.passed
        assert len(report.checks) == 5
        assert all(c.status is CheckStatus.VERIFIED for c in report.checks)
        assert report.checks[-1].name == "theta additivity"

    def test_chain_level_only(self, unknot2):
        """Test that the homology checks can be skipped."""
        log = VerificationLog()
        report = additivity_check(unknot2, unknot2, homology=False, log=log)
        statuses = [c.status for c in report.checks]
        assert statuses.count(CheckStatus.SKIPPED) == 2
        assert statuses.count(CheckStatus.VERIFIED) == 3
        assert report.passed
        assert report.log.events[0].event_type == "INFO"
