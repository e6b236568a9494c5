from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .bigrading import Bigrading


@dataclass(frozen=True, slots=True, order=True)
class TorsionSummand:
    """A summand F[U]/U^order generated in the given bigrading."""

    bigrading: Bigrading
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("torsion order must be >= 1")


@dataclass(frozen=True, slots=True)
class BigradedUModule:
    """
    Isomorphism type of a finitely generated bigraded F[U]-module.

    U has bigrading (-2, -1). The module is a sum of towers F[U] generated in
    ``towers`` plus the torsion summands, both kept sorted so equal modules
    compare equal. Modules of knots have exactly one tower.

    Example:
        >>> unknot = BigradedUModule.free(0, 0)
        >>> tensor_and_tor(unknot, unknot) == unknot
        True
    """

    towers: tuple[Bigrading, ...]
    torsion: tuple[TorsionSummand, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "towers", tuple(sorted(self.towers)))
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    @classmethod
    def free(cls, maslov: int = 0, alexander: int = 0) -> BigradedUModule:
        return cls((Bigrading(maslov, alexander),))

    def with_torsion(self, maslov: int, alexander: int, order: int) -> BigradedUModule:
        extra = TorsionSummand(Bigrading(maslov, alexander), order)
        return BigradedUModule(self.towers, self.torsion + (extra,))

    @property
    def tower_bigrading(self) -> Bigrading:
        """Bigrading of the unique tower generator."""
        if len(self.towers) != 1:
            raise ValueError(f"module has {len(self.towers)} towers, expected exactly one")
        return self.towers[0]

    @property
    def tau(self) -> int:
        """Minus the Alexander grading of the tower generator."""
        return -self.tower_bigrading.alexander

    def dimension(self, maslov: int, alexander: int) -> int:
        """Dimension over F_2 of the module in one bigrading."""
        dim = 0
        gens: list[tuple[Bigrading, int | None]] = [(t, None) for t in self.towers]
        gens += [(t.bigrading, t.order) for t in self.torsion]
        for grading, order in gens:
            k = grading.alexander - alexander
            if k < 0 or grading.maslov - 2 * k != maslov:
                continue
            if order is None or k < order:
                dim += 1
        return dim

    def hat_dimensions(self) -> dict[Bigrading, int]:
        """Dimensions of the homology of the complex with U set to zero.

        The tower contributes its generator; F[U]/U^k contributes its
        generator and a class k steps down shifted up by one in Maslov grading.
        """
        dims: Counter[Bigrading] = Counter(self.towers)
        for t in self.torsion:
            dims[t.bigrading] += 1
            dims[t.bigrading.shifted(t.order).offset(1, 0)] += 1
        return dict(sorted(dims.items()))


def tensor_and_tor(a: BigradedUModule, b: BigradedUModule) -> BigradedUModule:
    """
    A tensor B plus Tor(A, B) over F[U].

    Tower with tower gives the tower at the summed bigrading; tower with
    F[U]/U^k gives F[U]/U^k at the summed bigrading; F[U]/U^p with F[U]/U^q
    gives F[U]/U^min(p,q) at the summed bigrading plus a Tor summand of the
    same order generated at the summed bigrading shifted by
    (1 - 2 max(p,q), -max(p,q)).
    """
    for name, module in (("first", a), ("second", b)):
        if len(module.towers) != 1:
            raise ValueError(
                f"{name} argument has {len(module.towers)} towers, expected exactly one"
            )
    ta, tb = a.tower_bigrading, b.tower_bigrading
    tower = Bigrading(ta.maslov + tb.maslov, ta.alexander + tb.alexander)
    torsion: list[TorsionSummand] = []
    for t in b.torsion:
        torsion.append(TorsionSummand(t.bigrading.offset(*ta), t.order))
    for t in a.torsion:
        torsion.append(TorsionSummand(t.bigrading.offset(*tb), t.order))
    for s in a.torsion:
        for t in b.torsion:
            base = s.bigrading.offset(*t.bigrading)
            low, high = sorted((s.order, t.order))
            torsion.append(TorsionSummand(base, low))
            torsion.append(TorsionSummand(base.shifted(high).offset(1, 0), low))
    return BigradedUModule((tower,), tuple(torsion))
