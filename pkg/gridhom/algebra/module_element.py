from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass

from .bigrading import Bigrading
from .monomial import Monomial

Term = tuple[Monomial, int]


@dataclass(frozen=True, slots=True)
class ModuleElement:
    """
    A finite F_2-linear combination of terms ``monomial * generator``.

    Generators are integer ids into a complex's generator table. Equal terms
    cancel in pairs, so the element is stored as a set of terms.
    """

    terms: frozenset[Term] = frozenset()

    @classmethod
    def zero(cls) -> ModuleElement:
        return _ZERO

    @classmethod
    def generator(cls, gen: int, monomial: Monomial | None = None) -> ModuleElement:
        return cls(frozenset({(monomial or Monomial.one(), gen)}))

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> ModuleElement:
        """Sum the terms, cancelling repeated ones in pairs."""
        acc: set[Term] = set()
        for term in terms:
            if term in acc:
                acc.remove(term)
            else:
                acc.add(term)
        return cls(frozenset(acc))

    def __add__(self, other: ModuleElement) -> ModuleElement:
        return ModuleElement(self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(sorted(self.terms))

    def scale(self, monomial: Monomial) -> ModuleElement:
        if monomial.is_one():
            return self
        return ModuleElement(frozenset((m * monomial, g) for m, g in self.terms))

    def relabel_variables(self, mapping: Mapping[int, int]) -> ModuleElement:
        return ModuleElement.from_terms((m.relabel(mapping), g) for m, g in self.terms)

    def map_generators(self, fn: Callable[[int], int]) -> ModuleElement:
        return ModuleElement.from_terms((m, fn(g)) for m, g in self.terms)

    def generators(self) -> set[int]:
        return {g for _, g in self.terms}

    def bigradings(self, table: Sequence[Bigrading]) -> set[Bigrading]:
        """Bigradings of the individual terms."""
        return {table[g].shifted(m.degree) for m, g in self.terms}

    def homogeneous_bigrading(self, table: Sequence[Bigrading]) -> Bigrading | None:
        """The common bigrading of all terms, or None for zero.

        Raises:
            ValueError: If the terms have different bigradings.
        """
        found = self.bigradings(table)
        if not found:
            return None
        if len(found) > 1:
            raise ValueError(f"element is not homogeneous: {sorted(found)}")
        return found.pop()

    def format(self, labels: Callable[[int], str] = str) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, g in self:
            prefix = "" if m.is_one() else f"{m}*"
            parts.append(f"{prefix}{labels(g)}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()


_ZERO = ModuleElement()


def add(a: ModuleElement, b: ModuleElement) -> ModuleElement:
    """Sum in characteristic 2."""
    return a + b


def scale(monomial: Monomial, a: ModuleElement) -> ModuleElement:
    """Multiply every term by ``monomial``."""
    return a.scale(monomial)
