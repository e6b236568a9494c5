from .event import VerificationEvent
from .log import EVENT_TYPES, VerificationLog
from .models import (
    CheckResult,
    DimensionEntry,
    GradingEntry,
    HomologyReport,
    TorsionEntry,
    VerificationReport,
)

__all__ = [
    "CheckResult",
    "DimensionEntry",
    "EVENT_TYPES",
    "GradingEntry",
    "HomologyReport",
    "TorsionEntry",
    "VerificationEvent",
    "VerificationLog",
    "VerificationReport",
]
