"""The canonical states x+ and x- of a grid diagram."""

from __future__ import annotations

from dataclasses import dataclass

from ..common import CanonicalCorner
from ..grid import GridDiagram
from ..states import State


@dataclass(frozen=True, slots=True)
class CanonicalState:
    """x+ (northeast corners of the X squares) or x- (southwest corners)."""

    which: CanonicalCorner
    state: State

    def __str__(self) -> str:
        sign = "+" if self.which is CanonicalCorner.PLUS else "-"
        return f"x{sign} = {self.state}"


def canonical_state(d: GridDiagram, which: CanonicalCorner) -> CanonicalState:
    """
    The state made of one corner of every X square.

    The X in column i, row r has northeast corner (i + 1, r + 1) and
    southwest corner (i, r).

    Example:
        >>> from gridhom.grid import parse_text
        >>> d = parse_text("OX\\nXO")
        >>> str(canonical_state(d, CanonicalCorner.PLUS))
        'x+ = [0,1]'
    """
    n = d.n
    perm = [0] * n
    for i, r in enumerate(d.x_rows):
        if which is CanonicalCorner.PLUS:
            perm[(i + 1) % n] = (r + 1) % n
        else:
            perm[i] = r
    return CanonicalState(which, State(tuple(perm)))
