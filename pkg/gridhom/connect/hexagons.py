"""Empty hexagons with their 270 degree corner at a fixed lattice point.

Measured from the corner c, a hexagon out of x is the union of
[-dl, dr] x [0, dt] and [0, dr] x [-db, dt]: an L shape whose missing
quadrant lies southwest of c. Its source x holds (-dl, 0), (0, -db) and
(dr, dt); its target y holds c, (dr, -db) and (-dl, dt). With the marking
labels of either stabilization type, O1 and X1 sit in the two squares at c
that every such hexagon covers and X2 in the missing one.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..grid import GridDiagram, Square
from ..states import Point, State


@dataclass(frozen=True, slots=True)
class Hexagon:
    """
    An empty hexagon from ``source`` to ``target``.

    Attributes:
        corner: The 270 degree corner c, a point of ``target``.
        dl, dr: Reach left and right of c.
        db, dt: Reach below and above c.
        n: Grid size.
    """

    source: State
    target: State
    corner: Point
    dl: int
    dr: int
    db: int
    dt: int
    n: int

    def _covers(self, t: int, r: int) -> bool:
        """Whether the square at column offset t, row offset r (mod n) is covered."""
        if 0 <= r < self.dt:
            return True
        return t >= 0 and r >= self.n - self.db

    def column_offsets(self) -> range:
        return range(-self.dl, self.dr)

    def squares(self) -> list[Square]:
        cx, cy = self.corner
        n = self.n
        out = []
        for t in self.column_offsets():
            rows = range(-self.db if t >= 0 else 0, self.dt)
            out.extend(((cx + t) % n, (cy + s) % n) for s in rows)
        return out

    def contains_square(self, square: Square) -> bool:
        cx, cy = self.corner
        t = (square[0] - cx) % self.n
        if t >= self.dr:
            t -= self.n
        if t < -self.dl:
            return False
        return self._covers(t, (square[1] - cy) % self.n)

    def corners(self) -> list[Point]:
        """Lattice corners, convex ones first and c last."""
        cx, cy = self.corner
        n = self.n
        rel = [
            (-self.dl, 0),
            (-self.dl, self.dt),
            (self.dr, self.dt),
            (self.dr, -self.db),
            (0, -self.db),
            (0, 0),
        ]
        return [((cx + u) % n, (cy + v) % n) for u, v in rel]

    def contents(self, d: GridDiagram) -> tuple[frozenset[int], frozenset[int]]:
        """Columns whose O, respectively X, lies inside the hexagon."""
        return hexagon_contents(d, self)


def hexagon_contents(d: GridDiagram, h: Hexagon) -> tuple[frozenset[int], frozenset[int]]:
    cx, cy = h.corner
    n = d.n
    o_cols, x_cols = [], []
    for t in h.column_offsets():
        col = (cx + t) % n
        if h._covers(t, (d.o_rows[col] - cy) % n):
            o_cols.append(col)
        if h._covers(t, (d.x_rows[col] - cy) % n):
            x_cols.append(col)
    return frozenset(o_cols), frozenset(x_cols)


def hexagons_from(x: State, corner: Point) -> list[Hexagon]:
    """
    Every empty hexagon out of ``x`` with its 270 degree corner at ``corner``.

    States containing the corner have none.
    """
    n = x.n
    perm = x.perm
    cx, cy = corner[0] % n, corner[1] % n
    if perm[cx] == cy:
        return []
    dl = (cx - x.column_of_row(cy)) % n
    db = (cy - perm[cx]) % n
    out = []
    for dr in range(1, n - dl):
        right = (cx + dr) % n
        dt = (perm[right] - cy) % n
        if dt == 0 or db + dt > n - 1:
            continue
        blocked = False
        for t in range(-dl + 1, dr):
            r = (perm[(cx + t) % n] - cy) % n
            if 0 < r < dt or (t > 0 and r > n - db):
                blocked = True
                break
        if blocked:
            continue
        left = (cx - dl) % n
        target = list(perm)
        target[cx] = cy
        target[right] = perm[cx]
        target[left] = perm[right]
        out.append(Hexagon(x, State(tuple(target)), (cx, cy), dl, dr, db, dt, n))
    return out


def empty_hexagons(x: State, y: State, corner: Point) -> list[Hexagon]:
    """Empty hexagons from x to y with the 270 degree corner at ``corner``.

    Returns [] unless y arises from x by such a hexagon.
    """
    if x.n != y.n:
        raise ValueError(f"states of different sizes: {x.n} and {y.n}")
    if len(x.differing_columns(y)) != 3:
        return []
    return [h for h in hexagons_from(x, corner) if h.target == y]
