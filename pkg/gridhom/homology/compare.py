"""Comparing homology of complexes.

Every comparison either works from blocked homology, which decides
acyclicity exactly for free complexes, or inspects every Alexander level
from the top generator down to a level where both sides have stabilized
into towers. No level is skipped.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from ..algebra import Bigrading
from ..common import NeedDeeperProbe, WindowTooSmall
from ..complexes import ChainComplex, ChainMap, ConeComplex
from ..config import Window
from .module import LineHomology, default_probe_depth, module_structure, probe_bottom
from .slices import blocked_homology, homology_slice, mul2, rank2


def required_range(*complexes: ChainComplex) -> tuple[int, int] | None:
    """Alexander range a comparison must cover to see every summand.

    The bottom is one below the lowest blocked class of any of the
    complexes; ``None`` when all of them are acyclic.
    """
    bottoms = [b for c in complexes if (b := probe_bottom(c, symmetric=False)) is not None]
    if not bottoms:
        return None
    return min(bottoms), max(c.a_max for c in complexes if len(c))


def _bigradings(lines: Iterable[int], a_lo: int, a_hi: int) -> Iterator[Bigrading]:
    for line in sorted(set(lines)):
        for a in range(a_hi, a_lo - 1, -1):
            yield Bigrading(line + 2 * a, a)


def _check_window(window: Window | None, g: Bigrading) -> None:
    if window is not None and not window.contains(*g):
        raise WindowTooSmall(f"window {window} must cover {g} to compare homology")


def _stable_bottom(
    lines: list[tuple[LineHomology, int]], a_top: int, a_bottom: int, depth: int
) -> int:
    """Lower ``a_bottom`` until U is an isomorphism into it on every line.

    Each line comes with the Alexander offset of its levels.

    Raises:
        NeedDeeperProbe: no stable level within ``depth`` of the top.
    """
    a_bottom = min(a_bottom, a_top - 1)
    while True:
        for lh, shift in lines:
            lh.extend_to(a_top + shift, a_bottom + shift)
        if all(lh.is_stable(a_bottom + shift) for lh, shift in lines):
            return a_bottom
        a_bottom -= 1
        if a_top - a_bottom > depth:
            raise NeedDeeperProbe(a_top - a_bottom)


def homology_iso_check(
    c1: ChainComplex,
    c2: ChainComplex,
    probe_depth: int | None = None,
) -> bool:
    """
    Whether two complexes have isomorphic homology as bigraded F[U]-modules.

    Both decompositions probe to the bottom of their own blocked homology.

    Raises:
        NeedDeeperProbe: a decomposition did not stabilize within the depth.
    """
    r1 = module_structure(c1, probe_depth, symmetric=False)
    r2 = module_structure(c2, probe_depth, symmetric=False)
    return r1.module == r2.module


def _same_ring(f: ChainMap) -> bool:
    mapped = {f.variable_map.get(v, v) for v in f.source.variables}
    return mapped == set(f.source.variables) == set(f.target.variables)


def induced_map_is_iso(
    f: ChainMap, window: Window | None = None, probe_depth: int | None = None
) -> bool:
    """
    Whether ``f`` induces an isomorphism on homology.

    A map between complexes over the same variables is a quasi-isomorphism
    exactly when its mapping cone has no blocked homology. Otherwise every
    bigrading from the top generator down to a stable level is compared.

    Args:
        f: A chain map.
        window: Optional bound on the bigradings the comparison may visit.
        probe_depth: Largest number of levels to visit below the top.

    Raises:
        WindowTooSmall: the comparison needs a bigrading outside ``window``.
        NeedDeeperProbe: the homology did not stabilize within the depth.
    """
    if _same_ring(f):
        return not blocked_homology(ConeComplex(f, verify=False))
    src, tgt = f.source, f.target
    needed = required_range(src, tgt)
    if needed is None:
        return True
    lo, hi = needed
    dm, da = f.degree
    if probe_bottom(src, symmetric=False) is None or probe_bottom(tgt, symmetric=False) is None:
        return False
    lines = set(src.lines()) | {line - dm + 2 * da for line in tgt.lines()}
    depth = probe_depth if probe_depth is not None else max(
        default_probe_depth(src), default_probe_depth(tgt)
    )
    src_lines = {line: LineHomology(src, line) for line in lines}
    tgt_lines = {line: LineHomology(tgt, line + dm - 2 * da) for line in lines}
    lo = _stable_bottom(
        [(lh, 0) for lh in src_lines.values()] + [(lh, da) for lh in tgt_lines.values()],
        hi,
        lo,
        depth,
    )
    for g in _bigradings(lines, lo, hi):
        _check_window(window, g)
        s = src_lines[g.line].levels[g.alexander]
        t = tgt_lines[g.line].levels[g.alexander + da]
        if s.dimension != t.dimension:
            return False
        if s.dimension == 0:
            continue
        images = mul2(s.cycles, f.slice_matrix(*g).to_dense())
        if rank2(t.coordinates(images)) != s.dimension:
            return False
    return True


def is_acyclic(c: ChainComplex) -> bool:
    """Whether the homology of ``c`` vanishes.

    A free complex is acyclic exactly when its blocked homology is.
    """
    return not blocked_homology(c)


def homology_dimensions(c: ChainComplex, window: Window) -> dict[Bigrading, int]:
    """Nonzero homology dimensions over a window."""
    dims = {}
    hi = min(window.a_hi, c.a_max) if len(c) else window.a_lo - 1
    for g in _bigradings(c.lines(), window.a_lo, hi):
        if not window.contains(*g):
            continue
        d = homology_slice(c, *g).dimension
        if d:
            dims[g] = d
    return dims
