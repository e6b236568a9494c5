"""Rectangles on the grid torus.

A rectangle from ``x`` is fixed by an ordered pair of columns ``(left,
right)``: its lower-left corner is x's point on vertical circle ``left`` and
its upper-right corner is x's point on ``right``. The target state swaps the
two heights. Both ordered pairs of a column pair give the two toroidal
rectangles between the same states.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from ..grid import GridDiagram, Square
from .state import State

Point = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Rectangle:
    """
    An embedded rectangle on the torus from ``source`` to ``target``.

    Attributes:
        left, right: vertical circles of the lower-left and upper-right corners.
        bottom, top: horizontal circles of the same corners.
        n: grid size.
    """

    source: State
    target: State
    left: int
    right: int
    bottom: int
    top: int
    n: int

    @property
    def width(self) -> int:
        return (self.right - self.left) % self.n

    @property
    def height(self) -> int:
        return (self.top - self.bottom) % self.n

    @property
    def wraps_horizontally(self) -> bool:
        return self.right < self.left

    def columns(self) -> list[int]:
        """Square columns covered, left to right."""
        return [(self.left + t) % self.n for t in range(self.width)]

    def rows(self) -> list[int]:
        return [(self.bottom + t) % self.n for t in range(self.height)]

    def contains_square(self, square: Square) -> bool:
        i, j = square
        return (i - self.left) % self.n < self.width and (j - self.bottom) % self.n < self.height

    def squares(self) -> list[Square]:
        return [(i, j) for i in self.columns() for j in self.rows()]

    def interior_points(self, x: State) -> list[Point]:
        """Points of ``x`` strictly inside the rectangle."""
        found = []
        for t in range(1, self.width):
            col = (self.left + t) % self.n
            if 0 < (x.perm[col] - self.bottom) % self.n < self.height:
                found.append((col, x.perm[col]))
        return found

    def is_empty(self) -> bool:
        return not self.interior_points(self.source)


def _swap(x: State, u: int, v: int) -> State:
    perm = list(x.perm)
    perm[u], perm[v] = perm[v], perm[u]
    return State(tuple(perm))


def rectangle(x: State, left: int, right: int) -> Rectangle:
    n = x.n
    return Rectangle(
        source=x,
        target=_swap(x, left, right),
        left=left,
        right=right,
        bottom=x.perm[left],
        top=x.perm[right],
        n=n,
    )


def rectangles_from(x: State, *, empty_only: bool = True) -> Iterator[Rectangle]:
    """All rectangles starting at ``x``, by ordered pair of corner columns."""
    n = x.n
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            r = rectangle(x, u, v)
            if empty_only and not r.is_empty():
                continue
            yield r


def empty_rectangles(d: GridDiagram, x: State, y: State) -> list[Rectangle]:
    """Empty rectangles from ``x`` to ``y``; empty unless they differ in two columns."""
    if d.n != x.n or d.n != y.n:
        raise ValueError(f"states of size {x.n}, {y.n} do not fit an {d.n}x{d.n} grid")
    moved = x.differing_columns(y)
    if len(moved) != 2:
        return []
    u, v = moved
    found = []
    for left, right in ((u, v), (v, u)):
        r = rectangle(x, left, right)
        if r.is_empty():
            found.append(r)
    return found


def rectangle_contents(d: GridDiagram, r: Rectangle) -> tuple[frozenset[int], frozenset[int]]:
    """O and X markings inside ``r``, each named by its column."""
    o_set = set()
    x_set = set()
    for col in r.columns():
        if (d.o_rows[col] - r.bottom) % r.n < r.height:
            o_set.add(col)
        if (d.x_rows[col] - r.bottom) % r.n < r.height:
            x_set.add(col)
    return frozenset(o_set), frozenset(x_set)


@dataclass(frozen=True, slots=True)
class RectangleTerm:
    """One empty rectangle out of a state, with its marking content."""

    target: State
    o_columns: frozenset[int]
    x_columns: frozenset[int]


def rectangle_terms(d: GridDiagram, x: State) -> list[RectangleTerm]:
    """Every empty rectangle out of ``x`` with its O and X content.

    The grid differential keeps the X-free terms; other maps filter on the
    O content as well.
    """
    n = d.n
    perm = x.perm
    o_rows = d.o_rows
    x_rows = d.x_rows
    terms = []
    for u in range(n):
        bottom = perm[u]
        for v in range(n):
            if u == v:
                continue
            w = (v - u) % n
            h = (perm[v] - bottom) % n
            blocked = False
            for t in range(1, w):
                if 0 < (perm[(u + t) % n] - bottom) % n < h:
                    blocked = True
                    break
            if blocked:
                continue
            o_cols = []
            x_cols = []
            for t in range(w):
                col = (u + t) % n
                if (o_rows[col] - bottom) % n < h:
                    o_cols.append(col)
                if (x_rows[col] - bottom) % n < h:
                    x_cols.append(col)
            target = list(perm)
            target[u], target[v] = target[v], bottom
            terms.append(RectangleTerm(State(tuple(target)), frozenset(o_cols), frozenset(x_cols)))
    return terms
