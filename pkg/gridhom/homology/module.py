"""Assembling the bigraded F[U]-module structure of a complex's homology.

U preserves the line M - 2A, so each line is handled on its own as a chain
of finite vector spaces H_a -> H_{a-1} -> ... The summands are read off that
chain like a persistence barcode: a class born at level s (not hit by U from
above) that survives down to level t and dies below is F[U]/U^(s-t+1); one
that survives to the bottom of the probe is a tower.

The probe bottom comes from the homology with all variables set to zero. For
a knot complex that homology is symmetric, and with top Alexander grading g
every torsion class has died above level -g, so the probe stops at -g - 1.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..algebra import (
    BigradedUModule,
    Bigrading,
    EchelonBasis,
    ModuleElement,
    TorsionSummand,
    pack_bits,
)
from ..common import ClassKind, NeedDeeperProbe, NotACycle
from ..complexes import ChainComplex
from ..config import DEFAULT_PROBE_PADDING
from .slices import (
    Bits,
    HomologySlice,
    blocked_homology,
    homology_slice,
    left_kernel,
    mul2,
    rank2,
    u_action,
)


@dataclass
class LineHomology:
    """Homology along one line M - 2A = ``line`` with the U maps between levels."""

    complex: ChainComplex
    line: int
    levels: dict[int, HomologySlice] = field(default_factory=dict)
    maps: dict[int, Bits] = field(default_factory=dict)

    def extend_to(self, a_top: int, a_bottom: int) -> None:
        for a in range(a_top, a_bottom - 1, -1):
            if a not in self.levels:
                self.levels[a] = homology_slice(self.complex, self.line + 2 * a, a)
        for a in range(a_top, a_bottom, -1):
            if a not in self.maps:
                self.maps[a] = u_action(self.complex, self.levels[a], self.levels[a - 1])

    def dim(self, a: int) -> int:
        return self.levels[a].dimension

    def composite(self, s: int, t: int) -> Bits:
        """U^(s-t) from level s to level t."""
        out = np.eye(self.dim(s), dtype=np.uint8)
        for a in range(s, t, -1):
            out = mul2(out, self.maps[a])
        return out

    def is_stable(self, a_bottom: int) -> bool:
        upper, lower = self.dim(a_bottom + 1), self.dim(a_bottom)
        if upper != lower:
            return False
        return upper == 0 or rank2(self.maps[a_bottom + 1]) == upper


@dataclass(frozen=True)
class UModuleResult:
    """
    The F[U]-module structure of a complex's homology with explicit cycles.

    Attributes:
        complex: The complex.
        module: Isomorphism type (towers and torsion).
        towers: Generator bigrading and a representing cycle of every tower.
        torsion: Every torsion summand with a cycle generating it.
        lines: Per-line homology down to ``a_bottom``.
        a_top, a_bottom: Probed Alexander range.
    """

    complex: ChainComplex
    module: BigradedUModule
    towers: tuple[tuple[Bigrading, ModuleElement], ...]
    torsion: tuple[tuple[TorsionSummand, ModuleElement], ...]
    lines: dict[int, LineHomology]
    a_top: int
    a_bottom: int

    @property
    def tau(self) -> int:
        return self.module.tau

    @property
    def tower_cycle(self) -> ModuleElement:
        if len(self.towers) != 1:
            raise ValueError(f"homology has {len(self.towers)} towers, expected exactly one")
        return self.towers[0][1]


def default_probe_depth(c: ChainComplex) -> int:
    return c.a_max - c.a_min + DEFAULT_PROBE_PADDING


def probe_bottom(c: ChainComplex, symmetric: bool = True) -> int | None:
    """First Alexander level below which only towers survive, minus one.

    ``None`` when the complex is acyclic.
    """
    blocked = blocked_homology(c)
    if not blocked:
        return None
    if symmetric:
        bottom = -max(g.alexander for g in blocked)
    else:
        bottom = min(g.alexander for g in blocked)
    return min(bottom, c.a_max) - 1


def _bars(lh: LineHomology, a_top: int, a_bottom: int) -> tuple[list, list]:
    towers: list[tuple[Bigrading, ModuleElement]] = []
    torsion: list[tuple[TorsionSummand, ModuleElement]] = []
    for s in range(a_top, a_bottom - 1, -1):
        k = lh.dim(s)
        if k == 0:
            continue
        chosen = EchelonBasis(k)
        if s < a_top and lh.dim(s + 1):
            chosen.extend(pack_bits(lh.maps[s + 1], k))
        grading = Bigrading(lh.line + 2 * s, s)
        for t in range(s, a_bottom - 1, -1):
            if len(chosen) == k:
                break
            if t > a_bottom:
                candidates = left_kernel(lh.composite(s, t - 1))
            else:
                candidates = np.eye(k, dtype=np.uint8)
            if candidates.shape[0] == 0:
                continue
            picked = chosen.extend(pack_bits(candidates, k))
            for row in picked:
                cycle = lh.levels[s].representative(candidates[row])
                if t > a_bottom:
                    torsion.append((TorsionSummand(grading, s - t + 1), cycle))
                else:
                    towers.append((grading, cycle))
    return towers, torsion


def module_structure(
    c: ChainComplex,
    probe_depth: int | None = None,
    symmetric: bool = True,
    jobs: int = 1,
) -> UModuleResult:
    """
    Decompose the homology of ``c`` as a bigraded F[U]-module.

    Args:
        c: A complex whose homology is finitely generated over F[U].
        probe_depth: Largest number of Alexander levels to probe below the
            top generator; defaults to the generator span plus a margin.
        symmetric: Use the symmetric bound valid for knot complexes; other
            complexes probe to the bottom of their U = 0 homology.
        jobs: Worker threads, one line of the module per task.

    Raises:
        NeedDeeperProbe: the homology has not stabilized within the depth.
    """
    depth = default_probe_depth(c) if probe_depth is None else probe_depth
    a_top = c.a_max
    start = probe_bottom(c, symmetric)
    if start is None:
        return UModuleResult(c, BigradedUModule(()), (), (), {}, a_top, a_top)
    a_bottom = min(start, a_top - 1)
    if a_top - a_bottom > depth:
        raise NeedDeeperProbe(a_top - a_bottom)
    lines = {line: LineHomology(c, line) for line in c.lines()}

    def probe(lh: LineHomology) -> None:
        lh.extend_to(a_top, a_bottom)

    while True:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            list(pool.map(probe, lines.values()))
        if all(lh.is_stable(a_bottom) for lh in lines.values()):
            break
        a_bottom -= 1
        if a_top - a_bottom > depth:
            raise NeedDeeperProbe(a_top - a_bottom)

    towers: list[tuple[Bigrading, ModuleElement]] = []
    torsion: list[tuple[TorsionSummand, ModuleElement]] = []
    for line in sorted(lines):
        tw, ts = _bars(lines[line], a_top, a_bottom)
        towers.extend(tw)
        torsion.extend(ts)
    towers.sort(key=lambda p: p[0])
    torsion.sort(key=lambda p: p[0])
    module = BigradedUModule(tuple(g for g, _ in towers), tuple(t for t, _ in torsion))
    return UModuleResult(c, module, tuple(towers), tuple(torsion), lines, a_top, a_bottom)


def tau(c: ChainComplex, probe_depth: int | None = None, jobs: int = 1) -> int:
    """Minus the Alexander grading of the tower generator."""
    return module_structure(c, probe_depth, jobs=jobs).tau


@dataclass(frozen=True)
class ClassLocation:
    """
    Where a homogeneous cycle sits in the module.

    Attributes:
        kind: zero, torsion or non-torsion.
        bigrading: Bigrading of the cycle (None for the zero element).
        order: Smallest k with U^k killing the class, for torsion classes.
        tower_power: j with the class equal to U^j times the tower generator
            modulo torsion, for non-torsion classes.
    """

    kind: ClassKind
    bigrading: Bigrading | None = None
    order: int | None = None
    tower_power: int | None = None

    def __str__(self) -> str:
        if self.kind is ClassKind.ZERO:
            return "zero"
        if self.kind is ClassKind.TORSION:
            return f"torsion of order {self.order} at {self.bigrading}"
        return f"U^{self.tower_power} * tower at {self.bigrading}"


def _tower_on_line(result: UModuleResult, line: int) -> Bigrading:
    on_line = [g for g, _ in result.towers if g.line == line]
    if len(on_line) != 1:
        raise ValueError(f"expected one tower on line {line}, found {len(on_line)}")
    return on_line[0]


def locate_class(result: UModuleResult, cycle: ModuleElement) -> ClassLocation:
    """
    Place a homogeneous cycle in the module decomposition.

    Raises:
        NotACycle: ``cycle`` has nonzero boundary.
        ValueError: ``cycle`` is not homogeneous.
    """
    c = result.complex
    if c.boundary(cycle):
        raise NotACycle(f"element {c.format(cycle)} has nonzero boundary")
    grading = c.element_bigrading(cycle)
    if grading is None:
        return ClassLocation(ClassKind.ZERO)
    m, a = grading
    line = grading.line
    if a > result.a_top:
        return ClassLocation(ClassKind.ZERO, grading)
    lh = result.lines.get(line)
    if lh is None:
        return ClassLocation(ClassKind.ZERO, grading)
    if a < result.a_bottom:
        here = homology_slice(c, m, a)
        if not np.any(here.element_coordinates(cycle)):
            return ClassLocation(ClassKind.ZERO, grading)
        tower = _tower_on_line(result, line)
        return ClassLocation(ClassKind.NON_TORSION, grading, tower_power=tower.alexander - a)
    vec = lh.levels[a].element_coordinates(cycle)[None, :]
    if not np.any(vec):
        return ClassLocation(ClassKind.ZERO, grading)
    for level in range(a, result.a_bottom, -1):
        vec = mul2(vec, lh.maps[level])
        if not np.any(vec):
            return ClassLocation(ClassKind.TORSION, grading, order=a - level + 1)
    tower = _tower_on_line(result, line)
    return ClassLocation(ClassKind.NON_TORSION, grading, tower_power=tower.alexander - a)


def hat_homology(
    c: ChainComplex, probe_depth: int | None = None, jobs: int = 1
) -> dict[Bigrading, int]:
    """Dimensions of the homology with the designated variable set to zero."""
    return module_structure(c, probe_depth, jobs=jobs).module.hat_dimensions()
