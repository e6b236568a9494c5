"""Free bigraded chain complexes over F_2[U_i] and their finite slices.

A complex is a list of generators, each with a bigrading and a boundary
written as a :class:`ModuleElement` over the complex's variables. Every
variable lowers the bigrading by (2, 1), so the set of terms
``monomial * generator`` in a fixed bigrading (m, a) is finite: it consists
of generators with the same M - 2A line and A >= a, each times every
monomial of degree A - a. That set is a *slice*; the differential maps the
slice at (m, a) into the slice at (m - 1, a).
"""

from __future__ import annotations

import threading
from collections import defaultdict
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..algebra import Bigrading, F2Matrix, ModuleElement, Monomial, Term, monomials_of_degree
from ..common import GridHomologyError

DIFFERENTIAL_DEGREE = Bigrading(-1, 0)


@dataclass(frozen=True)
class ComplexSlice:
    """
    The differential restricted to one bigrading.

    Attributes:
        bigrading: (m, a) of the source terms.
        basis: Source terms, ordered by generator then monomial.
        target_basis: Terms of the slice at (m - 1, a), same ordering.
        images: Row ``i`` is the boundary of ``basis[i]`` in target coordinates.
    """

    bigrading: Bigrading
    basis: tuple[Term, ...]
    target_basis: tuple[Term, ...]
    images: F2Matrix
    _positions: dict[Term, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self._positions:
            self._positions.update({t: i for i, t in enumerate(self.basis)})

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> F2Matrix:
        """Boundary matrix acting on column vectors: target x source."""
        return self.images.transpose()

    def position(self, term: Term) -> int:
        return self._positions[term]

    def vector(self, element: ModuleElement) -> npt.NDArray[np.uint8]:
        """Coordinates of a homogeneous element in this slice's basis.

        Raises:
            KeyError: a term does not belong to the slice.
        """
        vec = np.zeros(self.dimension, dtype=np.uint8)
        for term in element.terms:
            vec[self._positions[term]] ^= 1
        return vec

    def element(self, bits: npt.ArrayLike) -> ModuleElement:
        """The element with the given coordinates."""
        support = np.flatnonzero(np.asarray(bits, dtype=np.uint8) & 1)
        return ModuleElement(frozenset(self.basis[int(i)] for i in support))

    def to_triplets(self) -> str:
        """Sparse dump of the boundary matrix, one ``row col`` pair per line.

        Rows index ``target_basis`` and columns index ``basis``; both 0-based.
        """
        dense = self.images.to_dense()
        cols, rows = np.nonzero(dense)
        order = np.lexsort((cols, rows))
        return "".join(f"{int(rows[k])} {int(cols[k])}\n" for k in order)


class ChainComplex:
    """
    A free chain complex over F_2[variables] with bigraded generators.

    Args:
        labels: Hashable name of each generator (states, pairs, tagged labels).
        gradings: Bigrading of each generator.
        variables: Indices of the polynomial variables.
        differential: Boundary of each generator, in generator ids.
        name: Free-form description used in reports.

    Slices are built lazily and cached; the cache is shared between threads.

    Example:
        >>> from gridhom.algebra import Bigrading, ModuleElement, Monomial
        >>> u = Monomial.from_variables([1])
        >>> c = ChainComplex(
        ...     labels=["x", "y"],
        ...     gradings=[Bigrading(0, 0), Bigrading(-1, -1)],
        ...     variables=[1],
        ...     differential=[ModuleElement.zero(), ModuleElement.generator(0, u)],
        ... )
        >>> c.slice(-1, -1).images.to_dense().tolist()
        [[1]]
    """

    def __init__(
        self,
        labels: Sequence[Hashable],
        gradings: Sequence[Bigrading],
        variables: Iterable[int],
        differential: Sequence[ModuleElement],
        name: str = "",
    ) -> None:
        if not (len(labels) == len(gradings) == len(differential)):
            raise ValueError(
                f"got {len(labels)} labels, {len(gradings)} gradings and "
                f"{len(differential)} boundaries"
            )
        self.labels: tuple[Hashable, ...] = tuple(labels)
        self.gradings: tuple[Bigrading, ...] = tuple(Bigrading(*g) for g in gradings)
        self.variables: tuple[int, ...] = tuple(sorted(set(variables)))
        self.differential: tuple[ModuleElement, ...] = tuple(differential)
        self.name = name
        self._index: dict[Hashable, int] | None = None
        self._by_line: dict[int, list[int]] = defaultdict(list)
        for i, g in enumerate(self.gradings):
            self._by_line[g.line].append(i)
        self._bases: dict[Bigrading, tuple[Term, ...]] = {}
        self._slices: dict[Bigrading, ComplexSlice] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        title = f" {self.name!r}" if self.name else ""
        return (
            f"<{type(self).__name__}{title}: {len(self)} generators, "
            f"variables {list(self.variables)}>"
        )

    # generators

    def index(self, label: Hashable) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def has_label(self, label: Hashable) -> bool:
        try:
            self.index(label)
        except KeyError:
            return False
        return True

    def element(self, label: Hashable, monomial: Monomial | None = None) -> ModuleElement:
        return ModuleElement.generator(self.index(label), monomial)

    def format(self, element: ModuleElement) -> str:
        return element.format(lambda g: str(self.labels[g]))

    @property
    def a_max(self) -> int:
        return max(g.alexander for g in self.gradings)

    @property
    def a_min(self) -> int:
        return min(g.alexander for g in self.gradings)

    def lines(self) -> list[int]:
        """The M - 2A values carried by generators, ascending."""
        return sorted(self._by_line)

    def generators_on_line(self, line: int) -> list[int]:
        return list(self._by_line.get(line, []))

    @property
    def designated_variable(self) -> int:
        """The variable whose multiplication defines the U-action."""
        if not self.variables:
            raise GridHomologyError("complex has no variables")
        return self.variables[0]

    # differential

    def boundary(self, element: ModuleElement) -> ModuleElement:
        out = ModuleElement.zero()
        for monomial, g in element.terms:
            out = out + self.differential[g].scale(monomial)
        return out

    def d_squared_failures(self, generators: Iterable[int] | None = None) -> list[int]:
        """Generators whose boundary has nonzero boundary."""
        ids = range(len(self)) if generators is None else generators
        return [g for g in ids if self.boundary(self.differential[g])]

    def inhomogeneous_generators(self) -> list[int]:
        """Generators whose boundary has a term outside bigrading (m - 1, a)."""
        bad = []
        for g, d in enumerate(self.differential):
            want = self.gradings[g].offset(*DIFFERENTIAL_DEGREE)
            if any(b != want for b in d.bigradings(self.gradings)):
                bad.append(g)
        return bad

    def element_bigrading(self, element: ModuleElement) -> Bigrading | None:
        return element.homogeneous_bigrading(self.gradings)

    # slices

    def slice_basis(self, m: int, a: int) -> tuple[Term, ...]:
        key = Bigrading(m, a)
        cached = self._bases.get(key)
        if cached is not None:
            return cached
        terms: list[Term] = []
        for g in self._by_line.get(key.line, []):
            k = self.gradings[g].alexander - a
            if k < 0:
                continue
            terms.extend((mono, g) for mono in monomials_of_degree(self.variables, k))
        basis = tuple(terms)
        with self._lock:
            self._bases.setdefault(key, basis)
        return basis

    def slice(self, m: int, a: int) -> ComplexSlice:
        """The finite piece of the complex in bigrading (m, a)."""
        key = Bigrading(m, a)
        cached = self._slices.get(key)
        if cached is not None:
            return cached
        basis = self.slice_basis(m, a)
        target = self.slice_basis(m - 1, a)
        positions = {t: i for i, t in enumerate(target)}
        support: list[list[int]] = []
        for mono, g in basis:
            row = []
            for dm, h in self.differential[g].terms:
                term = (mono * dm, h)
                try:
                    row.append(positions[term])
                except KeyError:
                    raise GridHomologyError(
                        f"boundary of {self.labels[g]} has a term outside bigrading "
                        f"({m - 1}, {a})"
                    ) from None
            support.append(row)
        result = ComplexSlice(
            key, basis, target, F2Matrix.from_support(len(target), support)
        )
        with self._lock:
            self._slices.setdefault(key, result)
        return self._slices[key]

    def multiply_positions(self, m: int, a: int, monomial: Monomial) -> npt.NDArray[np.int64]:
        """Where multiplication by ``monomial`` sends each basis term of (m, a)."""
        target = Bigrading(m, a).shifted(monomial.degree)
        positions = {t: i for i, t in enumerate(self.slice_basis(*target))}
        return np.asarray(
            [positions[(mono * monomial, g)] for mono, g in self.slice_basis(m, a)],
            dtype=np.int64,
        )
