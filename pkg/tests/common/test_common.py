"""Tests for gridhom.common module."""

import pytest

from gridhom.common import (
    CheckStatus,
    GridHomologyError,
    InputError,
    NeedDeeperProbe,
    NotAKnot,
    NotChainMap,
    NotStabilized,
    StateClass,
    VerificationFailure,
    WindowTooSmall,
    progress,
)


class TestErrors:
    """Test the error hierarchy."""

    @pytest.mark.parametrize("error", [NotAKnot, NotStabilized, WindowTooSmall])
    def test_input_errors(self, error):
        """Test that input problems share a base class."""
        assert issubclass(error, InputError)
        assert issubclass(error, GridHomologyError)

    def test_verification_failures(self):
        """Test that failed properties are not input errors."""
        assert issubclass(NotChainMap, VerificationFailure)
        assert not issubclass(NotChainMap, InputError)

    def test_value_error_compatible(self):
        """Test that callers catching ValueError still see gridhom errors."""
        with pytest.raises(ValueError):
            raise NotAKnot("2-component link")

    def test_need_deeper_probe(self):
        """Test that the suggested depth travels with the error."""
        err = NeedDeeperProbe(7)
        assert err.depth == 7
        assert str(err) == "probe depth too small; retry with depth=7"
        assert str(NeedDeeperProbe(3, "custom")) == "custom"


class TestEnums:
    """Test enum values used in reports."""

    def test_check_status_values(self):
        """Test the report spellings of check outcomes."""
        assert [s.value for s in CheckStatus] == ["verified", "sampled", "failed", "skipped"]

    def test_state_classes(self):
        """Test the S_0 classes."""
        assert [c for c in StateClass if c.in_s0] == [
            StateClass.II,
            StateClass.IN,
            StateClass.NI,
            StateClass.NN,
        ]
        assert StateClass("Sk") is StateClass.S_K


class TestProgress:
    """Test the optional progress bar wrapper."""

    def test_disabled(self):
        """Test that a disabled bar passes items through."""
        assert list(progress(iter([1, 2, 3]), False)) == [1, 2, 3]

    def test_enabled(self):
        """Test that an enabled bar yields the same items."""
        assert list(progress(range(4), True, total=4, desc="test")) == [0, 1, 2, 3]
