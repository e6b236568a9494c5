"""Error hierarchy.

Every error is a ``ValueError`` so callers that only care about "bad value"
can keep catching that. ``InputError`` subclasses describe a problem with
what the caller passed in; ``VerificationFailure`` subclasses mean a property
that must hold for every valid input was found broken, which is always an
implementation bug.
"""


class GridHomologyError(ValueError):
    """Base class for every error raised by gridhom."""


class InputError(GridHomologyError):
    """The caller supplied an unusable diagram, file, or parameter."""


class VerificationFailure(GridHomologyError):
    """A structural property failed to hold."""


class NotPermutation(InputError):
    """o_row or x_row is not a bijection onto 1..n."""


class SharedSquare(InputError):
    """An O and an X occupy the same square."""


class NotAKnot(InputError):
    """The diagram describes a link with more than one component."""


class BadCharacter(InputError):
    """Grid text contains a character outside {O, X, .}."""


class RaggedRows(InputError):
    """Grid text rows have inconsistent lengths."""


class PreconditionViolated(InputError):
    """A diagram does not have the marking required by a construction."""


class SizeMismatch(InputError):
    """Two diagrams that must have equal size do not."""


class NotStabilized(InputError):
    """The marking pattern around a stabilization is missing."""


class NotAConnectDiagram(InputError):
    """A diagram is not the output of ``connect``."""


class VariableClash(InputError):
    """Two complexes share variables that were not declared shared."""


class WindowTooSmall(InputError):
    """A bigrading window does not reach the stabilized range."""


class NotChainMap(VerificationFailure):
    """A map failed to commute with the differentials."""


class NotSubcomplex(VerificationFailure):
    """A generator set is not closed under the differential."""


class ZeroBlockViolated(VerificationFailure):
    """The differential has a component from the I part to the N part."""


class NotACycle(VerificationFailure):
    """A canonical state has a nonzero boundary."""


class HalfIntegerResult(VerificationFailure):
    """An Alexander grading came out as a half-integer."""


class NeedDeeperProbe(GridHomologyError):
    """The probe depth did not reach the stabilized range.

    Attributes:
        depth: A probe depth that would have been sufficient.
    """

    def __init__(self, depth: int, message: str | None = None) -> None:
        self.depth = depth
        super().__init__(message or f"probe depth too small; retry with depth={depth}")
