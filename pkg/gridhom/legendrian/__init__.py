from .canonical import CanonicalState, canonical_state
from .invariants import LegendrianClass, additivity_check, lambda_class, theta

__all__ = [
    "CanonicalState",
    "LegendrianClass",
    "additivity_check",
    "canonical_state",
    "lambda_class",
    "theta",
]
