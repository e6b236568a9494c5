from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from ..grid import GridDiagram

Point = tuple[int, int]


@dataclass(frozen=True, slots=True, order=True)
class State:
    """
    A generator of the grid complex: one lattice point on every vertical circle.

    ``perm[x] = y`` places the point of vertical circle ``x`` on horizontal
    circle ``y`` (both 0-based), so the state's points are ``(x, perm[x])``.
    """

    perm: tuple[int, ...]

    @classmethod
    def from_points(cls, points: set[Point] | list[Point], n: int) -> State:
        perm = [-1] * n
        for x, y in points:
            perm[x % n] = y % n
        if sorted(perm) != list(range(n)):
            raise ValueError(f"points {sorted(points)} do not form a state")
        return cls(tuple(perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    def points(self) -> tuple[Point, ...]:
        return tuple(enumerate(self.perm))

    def contains(self, point: Point) -> bool:
        x, y = point
        n = self.n
        return self.perm[x % n] == y % n

    def column_of_row(self, y: int) -> int:
        return self.perm.index(y % self.n)

    def differing_columns(self, other: State) -> list[int]:
        return [i for i, (a, b) in enumerate(zip(self.perm, other.perm)) if a != b]

    def translated(self, dx: int, dy: int) -> State:
        n = self.n
        perm = [0] * n
        for x, y in enumerate(self.perm):
            perm[(x + dx) % n] = (y + dy) % n
        return State(tuple(perm))

    def __str__(self) -> str:
        return "[" + ",".join(str(y) for y in self.perm) + "]"


def enumerate_states(d: GridDiagram) -> Iterator[State]:
    """Yield all n! states in lexicographic permutation order."""
    for perm in permutations(range(d.n)):
        yield State(perm)


def enumerate_states_with_first(d: GridDiagram, first: int) -> Iterator[State]:
    """States whose point on vertical circle 0 is at height ``first``.

    Partitions :func:`enumerate_states` so workers can split the space.
    """
    rest = [y for y in range(d.n) if y != first]
    for tail in permutations(rest):
        yield State((first,) + tail)
