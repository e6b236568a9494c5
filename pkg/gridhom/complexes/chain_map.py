from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor

from ..algebra import Bigrading, F2Matrix, ModuleElement, Monomial
from ..common import NotChainMap, progress
from .chain_complex import ChainComplex

_CHUNK = 256


class ChainMap:
    """
    A module map between free complexes, given on generators.

    ``images[g]`` is the image of source generator ``g`` written in target
    generator ids. Source variables are sent to target variables through
    ``variable_map`` (identity where unlisted), so the map is linear over the
    source ring acting on the target through that substitution.

    Args:
        source, target: The complexes.
        images: Image of every source generator.
        variable_map: Source variable -> target variable.
        degree: Bigrading shift of the map.
        name: Used in error messages and reports.
    """

    def __init__(
        self,
        source: ChainComplex,
        target: ChainComplex,
        images: Sequence[ModuleElement],
        variable_map: Mapping[int, int] | None = None,
        degree: Bigrading = Bigrading(0, 0),
        name: str = "",
    ) -> None:
        if len(images) != len(source):
            raise ValueError(
                f"{len(images)} images given for {len(source)} source generators"
            )
        self.source = source
        self.target = target
        self.images = tuple(images)
        self.variable_map = dict(variable_map or {})
        self.degree = Bigrading(*degree)
        self.name = name or "map"

    def __repr__(self) -> str:
        return f"<ChainMap {self.name!r} degree {self.degree}>"

    def map_monomial(self, monomial: Monomial) -> Monomial:
        return monomial.relabel(self.variable_map) if self.variable_map else monomial

    def apply(self, element: ModuleElement) -> ModuleElement:
        out = ModuleElement.zero()
        for monomial, g in element.terms:
            out = out + self.images[g].scale(self.map_monomial(monomial))
        return out

    def commutator(self, g: int) -> ModuleElement:
        """f(dx) + d(f(x)) for source generator ``g``."""
        return self.apply(self.source.differential[g]) + self.target.boundary(self.images[g])

    def chain_map_failures(
        self,
        generators: Iterable[int] | None = None,
        jobs: int = 1,
        show_progress: bool = False,
    ) -> list[int]:
        """Source generators on which the map fails to commute with d."""
        ids = list(range(len(self.source)) if generators is None else generators)
        chunks = [ids[k : k + _CHUNK] for k in range(0, len(ids), _CHUNK)]

        def run(chunk: list[int]) -> list[int]:
            return [g for g in chunk if self.commutator(g)]

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(run, chunks)
            failures: list[int] = []
            for found in progress(results, show_progress, len(chunks), self.name):
                failures.extend(found)
        return failures

    def check_chain_map(
        self, generators: Iterable[int] | None = None, jobs: int = 1, show_progress: bool = False
    ) -> None:
        """
        Raises:
            NotChainMap: the first generator where f d != d f.
        """
        failures = self.chain_map_failures(generators, jobs, show_progress)
        if failures:
            g = failures[0]
            raise NotChainMap(
                f"{self.name} does not commute with d at {self.source.labels[g]}: "
                f"f(dx) + d(f(x)) = {self.target.format(self.commutator(g))} "
                f"({len(failures)} failing generators)"
            )

    def inhomogeneous_generators(self) -> list[int]:
        bad = []
        for g, image in enumerate(self.images):
            want = self.source.gradings[g].offset(*self.degree)
            if any(b != want for b in image.bigradings(self.target.gradings)):
                bad.append(g)
        return bad

    def check_homogeneous(self) -> None:
        """
        Raises:
            NotChainMap: some image is not homogeneous of the map's degree.
        """
        bad = self.inhomogeneous_generators()
        if bad:
            g = bad[0]
            raise NotChainMap(
                f"{self.name} sends {self.source.labels[g]} at {self.source.gradings[g]} "
                f"to {self.target.format(self.images[g])}, not of degree {self.degree}"
            )

    def slice_matrix(self, m: int, a: int) -> F2Matrix:
        """Rows: images of the source slice basis at (m, a) in target slice coordinates."""
        src = self.source.slice_basis(m, a)
        tm, ta = Bigrading(m, a).offset(*self.degree)
        positions = {t: i for i, t in enumerate(self.target.slice_basis(tm, ta))}
        support = []
        for mono, g in src:
            image = self.images[g].scale(self.map_monomial(mono))
            support.append([positions[t] for t in image.terms])
        return F2Matrix.from_support(len(positions), support)

    def is_injective_on_slice(self, m: int, a: int) -> bool:
        matrix = self.slice_matrix(m, a)
        return matrix.rank() == matrix.rows

    def compose(self, after: ChainMap, name: str = "") -> ChainMap:
        """``after`` applied to the result of this map."""
        if after.source is not self.target:
            raise ValueError("composed maps do not share a middle complex")
        merged = {v: after.variable_map.get(w, w) for v, w in self.variable_map.items()}
        for v, w in after.variable_map.items():
            merged.setdefault(v, w)
        return ChainMap(
            self.source,
            after.target,
            [after.apply(image) for image in self.images],
            merged,
            self.degree.offset(*after.degree),
            name or f"{after.name} o {self.name}",
        )


def identity_map(c: ChainComplex) -> ChainMap:
    return ChainMap(c, c, [ModuleElement.generator(g) for g in range(len(c))], name="id")


def multiplication_map(c: ChainComplex, monomial: Monomial, name: str = "") -> ChainMap:
    """Multiplication by a monomial, a chain map of degree (-2k, -k)."""
    k = monomial.degree
    return ChainMap(
        c,
        c,
        [ModuleElement.generator(g, monomial) for g in range(len(c))],
        degree=Bigrading(-2 * k, -k),
        name=name or f"multiply by {monomial}",
    )


def sum_maps(f: ChainMap, g: ChainMap, name: str = "") -> ChainMap:
    """Pointwise sum of two maps with equal source, target and degree."""
    if f.source is not g.source or f.target is not g.target:
        raise ValueError("summed maps must share source and target")
    if f.degree != g.degree:
        raise ValueError(f"degrees differ: {f.degree} and {g.degree}")
    return ChainMap(
        f.source,
        f.target,
        [a + b for a, b in zip(f.images, g.images)],
        f.variable_map or g.variable_map,
        f.degree,
        name or f"{f.name} + {g.name}",
    )

