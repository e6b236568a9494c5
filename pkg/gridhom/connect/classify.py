"""Block geometry of a connected-sum diagram and the classes of its states.

A connect diagram g# of size 2n is cut by vertical circle n and horizontal
circle n into four n x n blocks. ``g11`` is the northwest block (columns
0..n-1, rows n..2n-1) holding g1', ``g22`` the southeast block holding g2',
and ``g12``/``g21`` the off-diagonal blocks. The distinguished points are

* a = (0, 0) and d = (n, n), the corners around the swapped O's;
* b = (n, 0), the O1 corner of g2' seen from g#;
* c = (0, n), the O1 corner of g1' seen from g#.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from ..common import NotAConnectDiagram, StateClass
from ..grid import GridDiagram, validate
from ..states import Point, State, enumerate_states

# BC_0 coincides with II: both name the S_0 states containing b and c
BC0 = StateClass.II


@dataclass(frozen=True, slots=True)
class BlockDecomposition:
    """The points of a state sorted into the four blocks."""

    x11: tuple[Point, ...]
    x12: tuple[Point, ...]
    x21: tuple[Point, ...]
    x22: tuple[Point, ...]

    @property
    def k(self) -> int:
        return len(self.x12)

    def __post_init__(self) -> None:
        if len(self.x11) != len(self.x22) or len(self.x12) != len(self.x21):
            raise ValueError(
                f"unbalanced blocks: {len(self.x11)}, {len(self.x12)}, "
                f"{len(self.x21)}, {len(self.x22)}"
            )


@dataclass(frozen=True)
class ConnectGeometry:
    """
    The block structure of a connect diagram.

    Args:
        diagram: Output of :func:`gridhom.grid.connect`.

    Raises:
        NotAConnectDiagram: the diagram is not laid out as a connect output.
    """

    diagram: GridDiagram

    def __post_init__(self) -> None:
        check_connect_diagram(self.diagram)

    @property
    def n(self) -> int:
        """Size of each prepared summand."""
        return self.diagram.n // 2

    @property
    def a(self) -> Point:
        return (0, 0)

    @property
    def b(self) -> Point:
        return (self.n, 0)

    @property
    def c(self) -> Point:
        return (0, self.n)

    @property
    def d(self) -> Point:
        return (self.n, self.n)

    def blocks(self, x: State) -> BlockDecomposition:
        n = self.n
        parts: dict[tuple[bool, bool], list[Point]] = {
            (False, True): [],
            (True, True): [],
            (False, False): [],
            (True, False): [],
        }
        for px, py in x.points():
            parts[(px >= n, py >= n)].append((px, py))
        return BlockDecomposition(
            x11=tuple(parts[(False, True)]),
            x12=tuple(parts[(True, True)]),
            x21=tuple(parts[(False, False)]),
            x22=tuple(parts[(True, False)]),
        )

    def state_class(self, x: State) -> StateClass:
        blocks = self.blocks(x)
        if blocks.k >= 2:
            return StateClass.S_K
        if blocks.k == 1:
            if x.contains(self.a) and x.contains(self.d):
                return StateClass.AD1
            return StateClass.S_1
        has_b, has_c = x.contains(self.b), x.contains(self.c)
        if has_b and has_c:
            return StateClass.II
        if has_b:
            return StateClass.IN
        if has_c:
            return StateClass.NI
        return StateClass.NN

    def split(self, x: State) -> tuple[State, State]:
        """
        The pair of summand states of an S_0 state.

        The g1' state is x11 moved down by n and the g2' state is x22 moved
        left by n.

        Raises:
            ValueError: x has points in the off-diagonal blocks.
        """
        n = self.n
        blocks = self.blocks(x)
        if blocks.k:
            raise ValueError(f"state {x} is not in S_0")
        first = State.from_points([(px, py - n) for px, py in blocks.x11], n)
        second = State.from_points([(px - n, py) for px, py in blocks.x22], n)
        return first, second

    def join(self, first: State, second: State) -> State:
        """Inverse of :meth:`split`."""
        n = self.n
        perm = [y + n for y in first.perm] + list(second.perm)
        return State(tuple(perm))

    def s0_states(self) -> Iterator[State]:
        """All S_0 states, g1' part major."""
        n = self.n
        for first in permutations(range(n)):
            for second in permutations(range(n)):
                yield State(tuple(y + n for y in first) + second)

    def ad1_states(self) -> Iterator[State]:
        """All states of AD_1: a and d plus one point per remaining row and column of the diagonal blocks."""
        n = self.n
        for first in permutations(range(n + 1, 2 * n)):
            for second in permutations(range(1, n)):
                yield State((0,) + first + (n,) + second)

    def c_states(self) -> list[State]:
        """Generators of C: AD_1 followed by S_0."""
        return list(self.ad1_states()) + list(self.s0_states())


def check_connect_diagram(d: GridDiagram) -> None:
    """
    Raises:
        NotAConnectDiagram: d does not have the block layout of a connect output.
    """
    validate(d)
    if d.n % 2 or d.n < 4:
        raise NotAConnectDiagram(f"connect diagrams have even size >= 4, got {d.n}")
    n = d.n // 2
    o_rows, x_rows = d.o_rows, d.x_rows
    if o_rows[n - 1] != n - 1 or o_rows[n] != n:
        raise NotAConnectDiagram(
            f"expected O's at (column {n}, row {n}) and (column {n + 1}, row {n + 1})"
        )
    for col in range(2 * n):
        left = col < n
        rows = [x_rows[col]] + ([o_rows[col]] if col not in (n - 1, n) else [])
        for row in rows:
            if (row >= n) != left:
                raise NotAConnectDiagram(
                    f"marking at (column {col + 1}, row {row + 1}) lies outside the diagonal blocks"
                )
    first, second = summand_diagrams(d)
    if first.x_rows[0] != 0 or first.x_rows[n - 1] != n - 1:
        raise NotAConnectDiagram("northwest block is not a prepared left summand")
    if second.x_rows[0] != 0 or second.x_rows[n - 1] != n - 1:
        raise NotAConnectDiagram("southeast block is not a prepared right summand")


def summand_diagrams(d: GridDiagram) -> tuple[GridDiagram, GridDiagram]:
    """Recover g1' and g2' from a connect diagram by undoing the O switch."""
    n = d.n // 2
    o1 = [r - n for r in d.o_rows[:n]]
    o1[n - 1] = 0
    x1 = [r - n for r in d.x_rows[:n]]
    o2 = list(d.o_rows[n:])
    o2[0] = n - 1
    x2 = list(d.x_rows[n:])
    first = GridDiagram(n=n, o_row=tuple(r + 1 for r in o1), x_row=tuple(r + 1 for r in x1))
    second = GridDiagram(n=n, o_row=tuple(r + 1 for r in o2), x_row=tuple(r + 1 for r in x2))
    return first, second


def classify(g: GridDiagram, x: State) -> tuple[BlockDecomposition, StateClass]:
    """
    Block decomposition and class of a state of a connect diagram.

    Raises:
        NotAConnectDiagram: g is not a connect output.
    """
    geometry = ConnectGeometry(g)
    return geometry.blocks(x), geometry.state_class(x)


def class_sizes(g: GridDiagram, states: list[State] | None = None) -> dict[StateClass, int]:
    """Number of states in each class, over all states unless given."""
    geometry = ConnectGeometry(g)
    counts = {cls: 0 for cls in StateClass}
    for x in states if states is not None else enumerate_states(g):
        counts[geometry.state_class(x)] += 1
    return counts
