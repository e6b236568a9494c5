"""Homology of one bigrading of a complex and the induced U-action."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..algebra import (
    Bigrading,
    EchelonBasis,
    F2Matrix,
    ModuleElement,
    Monomial,
    pack_bits,
    unpack_bits,
)
from ..common import NotACycle
from ..complexes import ChainComplex, ComplexSlice, blocked_complex

Bits = npt.NDArray[np.uint8]


def mul2(a: Bits, b: Bits) -> Bits:
    """Matrix product over F_2 of small dense arrays."""
    return ((a.astype(np.int64) @ b.astype(np.int64)) % 2).astype(np.uint8)


def rank2(a: Bits) -> int:
    if a.size == 0:
        return 0
    return F2Matrix.from_dense(a).rank()


def left_kernel(a: Bits) -> Bits:
    """Rows spanning {v : v a = 0}."""
    rows = a.shape[0]
    if rows == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    kernel = F2Matrix.from_dense(a.T.copy(), cols=rows).rank_kernel_image().kernel
    return kernel.to_dense()


@dataclass(frozen=True)
class HomologySlice:
    """
    Homology of the complex in one bigrading.

    Attributes:
        bigrading: (m, a).
        slice: The chain-level slice.
        cycles: One representing cycle per basis class, as rows in slice
            coordinates.
    """

    bigrading: Bigrading
    slice: ComplexSlice
    cycles: Bits
    _basis: EchelonBasis = field(repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return int(self.cycles.shape[0])

    def coordinates(self, vectors: Bits) -> Bits:
        """Homology coordinates of cycles given as rows in slice coordinates.

        Raises:
            NotACycle: a row is not a cycle.
        """
        vectors = np.atleast_2d(np.asarray(vectors, dtype=np.uint8))
        if vectors.shape[0] == 0:
            return np.zeros((0, self.dimension), dtype=np.uint8)
        if self.slice.dimension == 0:
            return np.zeros((vectors.shape[0], 0), dtype=np.uint8)
        residual, tags = self._basis.reduce(pack_bits(vectors, self.slice.dimension))
        if np.any(residual):
            raise NotACycle(f"vector at {self.bigrading} is not a cycle")
        return unpack_bits(tags, self.dimension) if self.dimension else np.zeros(
            (vectors.shape[0], 0), dtype=np.uint8
        )

    def element_coordinates(self, element: ModuleElement) -> Bits:
        return self.coordinates(self.slice.vector(element))[0]

    def representative(self, coords: Bits) -> ModuleElement:
        """A cycle in the class with the given homology coordinates."""
        row = mul2(np.atleast_2d(np.asarray(coords, dtype=np.uint8)), self.cycles)
        return self.slice.element(row[0])


def homology_slice(c: ChainComplex, m: int, a: int) -> HomologySlice:
    """Kernel modulo image of the differential at bigrading (m, a)."""
    here = c.slice(m, a)
    dim = here.dimension
    if dim == 0:
        return HomologySlice(
            Bigrading(m, a), here, np.zeros((0, 0), dtype=np.uint8), EchelonBasis(0)
        )
    incoming = c.slice(m + 1, a).images
    kernel = here.matrix.rank_kernel_image().kernel
    spans = EchelonBasis(dim)
    spans.extend(incoming.words)
    fresh = spans.extend(kernel.words)
    cycles = kernel.to_dense()[fresh]
    coords = EchelonBasis(dim, ntags=len(fresh))
    coords.extend(incoming.words)
    if fresh:
        coords.extend(pack_bits(cycles, dim), pack_bits(np.eye(len(fresh), dtype=np.uint8)))
    return HomologySlice(Bigrading(m, a), here, cycles, coords)


def u_action(c: ChainComplex, upper: HomologySlice, lower: HomologySlice) -> Bits:
    """Matrix of the designated variable from ``upper`` to ``lower`` (row convention)."""
    if upper.dimension == 0 or lower.dimension == 0:
        return np.zeros((upper.dimension, lower.dimension), dtype=np.uint8)
    m, a = upper.bigrading
    if lower.bigrading != upper.bigrading.shifted(1):
        raise ValueError(f"{lower.bigrading} is not one U-step below {upper.bigrading}")
    where = c.multiply_positions(m, a, Monomial.var(c.designated_variable))
    moved = np.zeros((upper.dimension, lower.slice.dimension), dtype=np.uint8)
    moved[:, where] = upper.cycles
    return lower.coordinates(moved)


def blocked_homology(c: ChainComplex) -> dict[Bigrading, int]:
    """Nonzero dimensions of the homology with every variable set to zero."""
    flat = blocked_complex(c)
    dims: dict[Bigrading, int] = {}
    for g in sorted(set(flat.gradings)):
        count = flat.slice(*g).dimension
        out_rank = flat.slice(*g).images.rank()
        in_rank = flat.slice(g.maslov + 1, g.alexander).images.rank()
        dim = count - out_rank - in_rank
        if dim:
            dims[g] = dim
    return dims
