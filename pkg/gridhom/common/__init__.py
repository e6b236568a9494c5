from .enums import (
    CanonicalCorner,
    CheckStatus,
    ClassKind,
    DestabilizationType,
    OutputFormat,
    StateClass,
)
from .errors import (
    BadCharacter,
    GridHomologyError,
    HalfIntegerResult,
    InputError,
    NeedDeeperProbe,
    NotAConnectDiagram,
    NotACycle,
    NotAKnot,
    NotChainMap,
    NotPermutation,
    NotStabilized,
    NotSubcomplex,
    PreconditionViolated,
    RaggedRows,
    SharedSquare,
    SizeMismatch,
    VariableClash,
    VerificationFailure,
    WindowTooSmall,
    ZeroBlockViolated,
)
from .progress import progress

__all__ = [
    "BadCharacter",
    "CanonicalCorner",
    "CheckStatus",
    "ClassKind",
    "DestabilizationType",
    "GridHomologyError",
    "HalfIntegerResult",
    "InputError",
    "NeedDeeperProbe",
    "NotAConnectDiagram",
    "NotACycle",
    "NotAKnot",
    "NotChainMap",
    "NotPermutation",
    "NotStabilized",
    "NotSubcomplex",
    "OutputFormat",
    "PreconditionViolated",
    "RaggedRows",
    "SharedSquare",
    "SizeMismatch",
    "StateClass",
    "VariableClash",
    "VerificationFailure",
    "WindowTooSmall",
    "ZeroBlockViolated",
    "progress",
]
