from .domains import MAX_ORACLE_SIZE, DomainOracle, domain_oracle
from .gradings import GradingCalculator, alexander, bigrading, maslov
from .rectangles import (
    Rectangle,
    RectangleTerm,
    empty_rectangles,
    rectangle,
    rectangle_contents,
    rectangle_terms,
    rectangles_from,
)
from .state import Point, State, enumerate_states, enumerate_states_with_first

__all__ = [
    "MAX_ORACLE_SIZE",
    "DomainOracle",
    "domain_oracle",
    "GradingCalculator",
    "alexander",
    "bigrading",
    "maslov",
    "Rectangle",
    "RectangleTerm",
    "empty_rectangles",
    "rectangle",
    "rectangle_contents",
    "rectangle_terms",
    "rectangles_from",
    "Point",
    "State",
    "enumerate_states",
    "enumerate_states_with_first",
]
