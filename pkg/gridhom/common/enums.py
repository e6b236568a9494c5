from enum import Enum, auto


class StateClass(str, Enum):
    """Classes of states of a connected-sum diagram.

    ``S_K`` covers every state with k >= 2 points in the off-diagonal blocks,
    and ``S_1`` covers the states of S_1 outside AD_1.
    """

    AD1 = "AD1"  # S_1 states containing a and d
    S_1 = "S1"
    S_K = "Sk"
    II = "II"  # b in x, c in x
    IN = "IN"  # b in x, c not in x
    NI = "NI"  # b not in x, c in x
    NN = "NN"

    @property
    def in_c(self) -> bool:
        """True for the classes spanning the subcomplex C."""
        return self in (
            StateClass.AD1,
            StateClass.II,
            StateClass.IN,
            StateClass.NI,
            StateClass.NN,
        )

    @property
    def in_s0(self) -> bool:
        return self in (StateClass.II, StateClass.IN, StateClass.NI, StateClass.NN)


class DestabilizationType(str, Enum):
    """Position of the removed X relative to the distinguished corner."""

    SE = "SE"
    NW = "NW"


class CanonicalCorner(str, Enum):
    """Which corner of the X squares forms a canonical state."""

    PLUS = "plus"  # northeast corners
    MINUS = "minus"  # southwest corners


class OutputFormat(str, Enum):
    """Report format for the command line."""

    TEXT = "text"
    JSON = "json"


class CheckStatus(str, Enum):
    """Outcome of a single verification check."""

    VERIFIED = "verified"
    SAMPLED = "sampled"
    FAILED = "failed"
    SKIPPED = "skipped"


class ClassKind(Enum):
    """Position of a homology class inside an F[U] decomposition."""

    ZERO = auto()
    TORSION = auto()
    NON_TORSION = auto()
