"""Stabilized summand diagrams and the connected-sum diagram built from them."""

from __future__ import annotations

from dataclasses import dataclass

from ..common import DestabilizationType, NotStabilized, PreconditionViolated, SizeMismatch
from .diagram import GridDiagram, Square, translate, validate

Point = tuple[int, int]


def has_top_left_x(d: GridDiagram) -> bool:
    return d.x_rows[0] == d.n - 1


def has_bottom_right_x(d: GridDiagram) -> bool:
    return d.x_rows[d.n - 1] == 0


def normalize_left(d: GridDiagram) -> GridDiagram:
    """Translate vertically so the X in the first column sits in the top row."""
    return translate(d, 0, (d.n - 1) - d.x_rows[0])


def normalize_right(d: GridDiagram) -> GridDiagram:
    """Translate vertically so the X in the last column sits in the bottom row."""
    return translate(d, 0, -d.x_rows[d.n - 1])


def prepare_summand_left(g1: GridDiagram) -> GridDiagram:
    """
    Build g1' from g1, whose top-left square must hold an X.

    g1 is moved up one row and that X is removed. A new bottom row and a new
    right column are added, with X's in the bottom-left and top-right squares
    and an O in the bottom-right square.

    Raises:
        PreconditionViolated: the top-left square of g1 has no X.
    """
    if not has_top_left_x(g1):
        raise PreconditionViolated(
            f"top-left square (column 1, row {g1.n}) of the left summand has no X"
        )
    n = g1.n + 1
    o_row = [r + 1 for r in g1.o_row] + [1]
    x_row = [1] + [r + 1 for r in g1.x_row[1:]] + [n]
    d = GridDiagram(n=n, o_row=tuple(o_row), x_row=tuple(x_row))
    validate(d)
    return d


def prepare_summand_right(g2: GridDiagram) -> GridDiagram:
    """
    Build g2' from g2, whose bottom-right square must hold an X.

    g2 is moved right one column and that X is removed. A new left column and
    a new top row are added, with X's in the bottom-left and top-right squares
    and an O in the top-left square.

    Raises:
        PreconditionViolated: the bottom-right square of g2 has no X.
    """
    if not has_bottom_right_x(g2):
        raise PreconditionViolated(
            f"bottom-right square (column {g2.n}, row 1) of the right summand has no X"
        )
    n = g2.n + 1
    o_row = [n] + list(g2.o_row)
    x_row = [1] + list(g2.x_row[:-1]) + [n]
    d = GridDiagram(n=n, o_row=tuple(o_row), x_row=tuple(x_row))
    validate(d)
    return d


def _check_prepared_left(d: GridDiagram) -> None:
    n = d.n
    if not (d.x_rows[0] == 0 and d.x_rows[n - 1] == n - 1 and d.o_rows[n - 1] == 0):
        raise PreconditionViolated("first diagram is not a prepared left summand")


def _check_prepared_right(d: GridDiagram) -> None:
    n = d.n
    if not (d.x_rows[0] == 0 and d.x_rows[n - 1] == n - 1 and d.o_rows[0] == n - 1):
        raise PreconditionViolated("second diagram is not a prepared right summand")


def connect(g1p: GridDiagram, g2p: GridDiagram) -> GridDiagram:
    """
    The 2n x 2n connected-sum diagram.

    g1' fills the northwest block and g2' the southeast block; the O's in
    rows n and n+1 are then swapped, leaving O's on the diagonal squares
    (n, n) and (n+1, n+1).

    Raises:
        SizeMismatch: the two diagrams differ in size.
        PreconditionViolated: an input is not a prepared summand.
    """
    if g1p.n != g2p.n:
        raise SizeMismatch(f"summand sizes differ: {g1p.n} and {g2p.n}")
    _check_prepared_left(g1p)
    _check_prepared_right(g2p)
    n = g1p.n
    o_row = [r + n for r in g1p.o_row] + list(g2p.o_row)
    x_row = [r + n for r in g1p.x_row] + list(g2p.x_row)
    # the two O's in rows n and n+1 trade columns
    o_row[n - 1], o_row[n] = n, n + 1
    d = GridDiagram(n=2 * n, o_row=tuple(o_row), x_row=tuple(x_row))
    validate(d)
    return d


def connected_sum_diagram(g1: GridDiagram, g2: GridDiagram) -> GridDiagram:
    """Normalize both summands, prepare them, and connect."""
    return connect(
        prepare_summand_left(normalize_left(g1)),
        prepare_summand_right(normalize_right(g2)),
    )


@dataclass(frozen=True, slots=True)
class MarkingLabels:
    """
    The markings around a stabilization.

    Attributes:
        kind: SE when the removed X sat southeast of ``corner``, NW otherwise.
        o1: Square of O1, diagonally adjacent to ``corner``.
        o2: Square of O2 (same column as X1 for SE, same row as X1 for NW).
        x1: Square of X1, northeast of ``corner``.
        x2: Square of X2, southwest of ``corner``.
        empty: The unmarked square at ``corner`` where the merged X goes.
        corner: The lattice point c shared by O1, X1, X2 and ``empty``.
    """

    kind: DestabilizationType
    o1: Square
    o2: Square
    x1: Square
    x2: Square
    empty: Square
    corner: Point


def _labels_at(d: GridDiagram, col: int, kind: DestabilizationType) -> MarkingLabels | None:
    n = d.n
    i, j = col, d.o_rows[col]
    if kind is DestabilizationType.SE:
        x1, x2 = ((i + 1) % n, j), (i, (j - 1) % n)
        corner = ((i + 1) % n, j)
        empty = ((i + 1) % n, (j - 1) % n)
    else:
        x1, x2 = (i, (j + 1) % n), ((i - 1) % n, j)
        corner = (i, (j + 1) % n)
        empty = ((i - 1) % n, (j + 1) % n)
    if d.x_rows[x1[0]] != x1[1] or d.x_rows[x2[0]] != x2[1]:
        return None
    if kind is DestabilizationType.SE:
        o2 = (x1[0], d.o_rows[x1[0]])
    else:
        o2 = (d.o_column_of_row(x1[1]), x1[1])
    return MarkingLabels(kind, (i, j), o2, x1, x2, empty, corner)


def canonical_marking_labels(
    d: GridDiagram, kind: DestabilizationType | None = None
) -> MarkingLabels:
    """
    Locate O1, O2, X1, X2 of a stabilized diagram.

    For SE, X1 is right of O1 and X2 below it; for NW, X1 is above O1 and X2
    to its left. The O placed by ``prepare_summand_left`` (SE) or
    ``prepare_summand_right`` (NW) is preferred when several O's match.

    Raises:
        NotStabilized: no O has the required neighbours.
    """
    n = d.n
    kinds = [kind] if kind is not None else [DestabilizationType.SE, DestabilizationType.NW]
    for k in kinds:
        preferred = n - 1 if k is DestabilizationType.SE else 0
        order = [preferred] + [c for c in range(n) if c != preferred]
        for col in order:
            labels = _labels_at(d, col, k)
            if labels is not None:
                return labels
    wanted = kind.value if kind is not None else "SE or NW"
    raise NotStabilized(f"no {wanted} stabilization pattern in the {n}x{n} diagram")


def destabilized_diagram(d: GridDiagram, labels: MarkingLabels) -> GridDiagram:
    """Delete O1's row and column and merge X1, X2 into the empty square."""
    n = d.n
    r, s = labels.o1

    def squeeze(k: int, removed: int) -> int:
        return k if k < removed else k - 1

    o_row = [0] * (n - 1)
    x_row = [0] * (n - 1)
    for i in range(n):
        if i == r:
            continue
        o_row[squeeze(i, r)] = squeeze(d.o_rows[i], s) + 1
        xr = d.x_rows[i]
        if (i, xr) != labels.x1 and (i, xr) != labels.x2:
            x_row[squeeze(i, r)] = squeeze(xr, s) + 1
    ei, ej = labels.empty
    x_row[squeeze(ei, r)] = squeeze(ej, s) + 1
    g = GridDiagram(n=n - 1, o_row=tuple(o_row), x_row=tuple(x_row))
    validate(g)
    return g
