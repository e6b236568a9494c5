"""Maslov and Alexander gradings by pair counting.

Points are placed at doubled coordinates so state points (2x, 2y) and
marking centres (2i+1, 2j+1) never tie. ``I(A, B)`` counts pairs a in A,
b in B with a strictly southwest of b. With the cut along circle 0,

    M(x)  = I(x,x) - I(x,O) - I(O,x) + I(O,O) + 1
    2A(x) = I(x,X) + I(X,x) - I(x,O) - I(O,x) + I(O,O) - I(X,X) - (n - 1)
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from ..algebra import Bigrading
from ..common import HalfIntegerResult
from ..grid import GridDiagram
from .state import State

IntArray = npt.NDArray[np.int64]

_CHUNK = 4096


def _pair_count(ax: IntArray, ay: IntArray, bx: IntArray, by: IntArray) -> IntArray:
    """Batched I(A, B): arrays have shape (S, |A|) and (S, |B|)."""
    less = (ax[:, :, None] < bx[:, None, :]) & (ay[:, :, None] < by[:, None, :])
    return np.asarray(less.sum(axis=(1, 2)), dtype=np.int64)


class GradingCalculator:
    """Batched gradings for all states of one diagram."""

    def __init__(self, d: GridDiagram) -> None:
        self.diagram = d
        n = d.n
        cols = np.arange(n, dtype=np.int64)
        self._px = 2 * cols
        self._ox = 2 * cols + 1
        self._oy = 2 * np.asarray(d.o_rows, dtype=np.int64) + 1
        self._xy = 2 * np.asarray(d.x_rows, dtype=np.int64) + 1
        one = lambda a: a[None, :]  # noqa: E731
        self._i_oo = int(_pair_count(one(self._ox), one(self._oy), one(self._ox), one(self._oy))[0])
        self._i_xx = int(_pair_count(one(self._ox), one(self._xy), one(self._ox), one(self._xy))[0])

    def doubled(self, perms: npt.ArrayLike) -> tuple[IntArray, IntArray]:
        """(M, 2A) for an (S, n) array of permutations."""
        arr = np.asarray(perms, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr[None, :]
        n = self.diagram.n
        maslov = np.empty(arr.shape[0], dtype=np.int64)
        twice_a = np.empty(arr.shape[0], dtype=np.int64)
        for start in range(0, arr.shape[0], _CHUNK):
            py = 2 * arr[start : start + _CHUNK]
            s = py.shape[0]
            px = np.broadcast_to(self._px, (s, n))
            ox = np.broadcast_to(self._ox, (s, n))
            oy = np.broadcast_to(self._oy, (s, n))
            xy = np.broadcast_to(self._xy, (s, n))
            i_pp = _pair_count(px, py, px, py)
            i_po = _pair_count(px, py, ox, oy)
            i_op = _pair_count(ox, oy, px, py)
            i_px = _pair_count(px, py, ox, xy)
            i_xp = _pair_count(ox, xy, px, py)
            maslov[start : start + s] = i_pp - i_po - i_op + self._i_oo + 1
            twice_a[start : start + s] = (
                i_px + i_xp - i_po - i_op + self._i_oo - self._i_xx - (n - 1)
            )
        return maslov, twice_a

    def bigradings(self, states: Sequence[State]) -> list[Bigrading]:
        """Integer bigradings; raises HalfIntegerResult on an odd 2A."""
        if not states:
            return []
        maslov, twice_a = self.doubled([s.perm for s in states])
        odd = np.flatnonzero(twice_a % 2)
        if odd.size:
            bad = states[int(odd[0])]
            raise HalfIntegerResult(
                f"state {bad} has Alexander grading {int(twice_a[odd[0]])}/2"
            )
        return [Bigrading(int(m), int(a) // 2) for m, a in zip(maslov, twice_a)]


def maslov(d: GridDiagram, x: State) -> int:
    return int(GradingCalculator(d).doubled(x.perm)[0][0])


def alexander(d: GridDiagram, x: State) -> int:
    """Alexander grading of a state.

    Raises:
        HalfIntegerResult: the diagram does not describe a knot.
    """
    return GradingCalculator(d).bigradings([x])[0].alexander


def bigrading(d: GridDiagram, x: State) -> Bigrading:
    return GradingCalculator(d).bigradings([x])[0]
