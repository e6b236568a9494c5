"""Brute-force search over 0/1 domains on small grids.

Used as an independent check of the rectangle and hexagon enumerators. Every
subset of the n^2 squares is scored at once, so this is only practical for
n <= 4.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import numpy.typing as npt

from ..grid import Square
from .state import Point, State

MAX_ORACLE_SIZE = 4

BoolArray = npt.NDArray[np.bool_]


def _incident(masks: BoolArray) -> tuple[BoolArray, BoolArray, BoolArray, BoolArray]:
    """Squares NE, NW, SW, SE of every lattice point, each shaped (S, n, n)."""
    ne = masks
    nw = np.roll(masks, 1, axis=1)
    sw = np.roll(nw, 1, axis=2)
    se = np.roll(masks, 1, axis=2)
    return ne, nw, sw, se


def _proper_interval(v: BoolArray) -> BoolArray:
    """Rows of ``v`` that mark one cyclic run, neither empty nor everything."""
    starts = v & ~np.roll(v, 1, axis=1)
    return starts.sum(axis=1) == 1


class DomainOracle:
    """
    All 0/1 domains of an n x n torus with their corner data.

    ``masks[s, i, j]`` says whether square (i, j) belongs to domain ``s``.
    The corner function at a lattice point is NE + SW - NW - SE over its four
    incident squares; a domain from x to y has corner function 1_x - 1_y.
    ``is_rectangle`` marks masks equal to the product of a proper cyclic run
    of columns and a proper cyclic run of rows.

    Example:
        >>> oracle = DomainOracle(2)
        >>> oracle.masks.shape
        (16, 2, 2)
    """

    def __init__(self, n: int) -> None:
        if not 1 <= n <= MAX_ORACLE_SIZE:
            raise ValueError(f"domain search supports n <= {MAX_ORACLE_SIZE}, got {n}")
        self.n = n
        count = 1 << (n * n)
        codes = np.arange(count, dtype=np.int64)
        bits = (codes[:, None] >> np.arange(n * n, dtype=np.int64)) & 1
        self.masks: BoolArray = bits.astype(bool).reshape(count, n, n)
        ne, nw, sw, se = _incident(self.masks)
        as_int = [a.astype(np.int8) for a in (ne, nw, sw, se)]
        self.corner = (as_int[0] + as_int[2] - as_int[1] - as_int[3]).reshape(count, n * n)
        touching = as_int[0] + as_int[1] + as_int[2] + as_int[3]
        self.convex = (touching == 1).reshape(count, n * n)
        self.concave = (touching == 3).reshape(count, n * n)
        self.interior = (touching == 4).reshape(count, n * n)
        self.euler = self._euler_characteristic(ne, nw, sw, se)
        columns = self.masks.any(axis=2)
        rows = self.masks.any(axis=1)
        self.bounded = _proper_interval(columns) & _proper_interval(rows)
        product = columns[:, :, None] & rows[:, None, :]
        self.is_rectangle = self.bounded & np.all(self.masks == product, axis=(1, 2))
        self.is_connected = self._connected()

    def _euler_characteristic(
        self, ne: BoolArray, nw: BoolArray, sw: BoolArray, se: BoolArray
    ) -> npt.NDArray[np.int64]:
        vertices = (ne | nw | sw | se).sum(axis=(1, 2))
        horizontal = (ne | se).sum(axis=(1, 2))
        vertical = (ne | nw).sum(axis=(1, 2))
        faces = self.masks.sum(axis=(1, 2))
        return np.asarray(vertices - horizontal - vertical + faces, dtype=np.int64)

    def _connected(self) -> BoolArray:
        """4-connectivity on the torus, by flooding from the first square."""
        count, n = len(self.masks), self.n
        flat = self.masks.reshape(count, n * n)
        seed = np.zeros_like(flat)
        seed[np.arange(count), np.argmax(flat, axis=1)] = True
        seed &= flat
        reached = seed.reshape(count, n, n)
        for _ in range(n * n):
            grown = reached.copy()
            for axis in (1, 2):
                for step in (1, -1):
                    grown |= np.roll(reached, step, axis=axis)
            reached = grown & self.masks
        return np.all(reached == self.masks, axis=(1, 2))

    def _point_index(self, p: Point) -> int:
        return (p[0] % self.n) * self.n + p[1] % self.n

    def _indicator(self, points: list[Point]) -> npt.NDArray[np.int8]:
        vec = np.zeros(self.n * self.n, dtype=np.int8)
        for p in points:
            vec[self._point_index(p)] += 1
        return vec

    def _interior_free(self, x: State) -> BoolArray:
        at_x = self._indicator(list(x.points())).astype(bool)
        return ~np.any(self.interior & at_x[None, :], axis=1)

    def _squares(self, index: int) -> frozenset[Square]:
        i, j = np.nonzero(self.masks[index])
        return frozenset((int(a), int(b)) for a, b in zip(i, j))

    def domain_indices(self, x: State, y: State) -> npt.NDArray[np.int64]:
        """Indices of nonzero disk-like domains whose corner function is 1_x - 1_y."""
        target = self._indicator(list(x.points())) - self._indicator(list(y.points()))
        hit = np.all(self.corner == target[None, :], axis=1) & (self.euler == 1)
        hit[0] = False
        return np.flatnonzero(hit)

    def domains(self, x: State, y: State) -> list[frozenset[Square]]:
        return [self._squares(int(s)) for s in self.domain_indices(x, y)]

    def empty_rectangles(self, x: State, y: State) -> list[frozenset[Square]]:
        """Rectangles from x to y with no point of x in their interior."""
        idx = self.domain_indices(x, y)
        keep = self.is_rectangle[idx] & self._interior_free(x)[idx]
        return [self._squares(int(s)) for s in idx[keep]]

    def empty_hexagons(self, x: State, y: State, corner: Point) -> list[frozenset[Square]]:
        """L-shaped domains from x to y with their reflex corner at ``corner``."""
        idx = self.domain_indices(x, y)
        c = self._point_index(corner)
        keep = (
            self.is_connected[idx]
            & (self.convex[idx].sum(axis=1) == 5)
            & (self.concave[idx].sum(axis=1) == 1)
            & self.concave[idx, c]
            & self._interior_free(x)[idx]
        )
        return [self._squares(int(s)) for s in idx[keep]]


@lru_cache(maxsize=MAX_ORACLE_SIZE)
def domain_oracle(n: int) -> DomainOracle:
    return DomainOracle(n)
