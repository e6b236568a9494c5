from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement


@dataclass(frozen=True, slots=True, order=True)
class Monomial:
    """
    A monomial U_1^{e_1} ... U_k^{e_k} over F_2.

    Stored sparsely as sorted ``(variable, exponent)`` pairs with positive
    exponents; the empty tuple is the unit monomial. Each variable power
    lowers the bigrading by (2, 1).

    Example:
        >>> m = Monomial.var(1) * Monomial.var(2, 2)
        >>> str(m), m.degree
        ('U1U2^2', 3)
    """

    powers: tuple[tuple[int, int], ...] = ()

    @classmethod
    def one(cls) -> Monomial:
        return _ONE

    @classmethod
    def var(cls, index: int, power: int = 1) -> Monomial:
        if power < 0:
            raise ValueError("power must be >= 0")
        if power == 0:
            return _ONE
        return cls(((index, power),))

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> Monomial:
        """Build from a variable -> exponent map, dropping zero exponents."""
        if any(e < 0 for e in exponents.values()):
            raise ValueError("exponents must be non-negative")
        return cls(tuple(sorted((v, e) for v, e in exponents.items() if e > 0)))

    @classmethod
    def from_variables(cls, variables: Iterable[int]) -> Monomial:
        """Product of the listed variables, with repetition."""
        return cls(tuple(sorted(Counter(variables).items())))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.powers)

    def exponent(self, index: int) -> int:
        for v, e in self.powers:
            if v == index:
                return e
        return 0

    def is_one(self) -> bool:
        return not self.powers

    def __mul__(self, other: Monomial) -> Monomial:
        if not other.powers:
            return self
        if not self.powers:
            return other
        merged = dict(self.powers)
        for v, e in other.powers:
            merged[v] = merged.get(v, 0) + e
        return Monomial(tuple(sorted(merged.items())))

    def without(self, index: int) -> Monomial:
        """The monomial with the given variable's exponent set to zero."""
        return Monomial(tuple(p for p in self.powers if p[0] != index))

    def relabel(self, mapping: Mapping[int, int]) -> Monomial:
        """Rename variables; variables missing from ``mapping`` are kept."""
        merged: dict[int, int] = {}
        for v, e in self.powers:
            w = mapping.get(v, v)
            merged[w] = merged.get(w, 0) + e
        return Monomial(tuple(sorted(merged.items())))

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "".join(f"U{v}" if e == 1 else f"U{v}^{e}" for v, e in self.powers)


_ONE = Monomial()


@lru_cache(maxsize=4096)
def monomials_of_degree(variables: tuple[int, ...], degree: int) -> tuple[Monomial, ...]:
    """All monomials of a given total degree, in lexicographic order."""
    if degree < 0:
        return ()
    return tuple(
        Monomial.from_variables(combo)
        for combo in combinations_with_replacement(variables, degree)
    )
