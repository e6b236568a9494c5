from typing import NamedTuple


class Bigrading(NamedTuple):
    """Maslov and Alexander gradings of a homogeneous element."""

    maslov: int
    alexander: int

    def shifted(self, degree: int) -> "Bigrading":
        """Bigrading after multiplying by a monomial of the given total degree."""
        return Bigrading(self.maslov - 2 * degree, self.alexander - degree)

    def offset(self, dm: int, da: int) -> "Bigrading":
        return Bigrading(self.maslov + dm, self.alexander + da)

    @property
    def line(self) -> int:
        """The U-invariant combination M - 2A."""
        return self.maslov - 2 * self.alexander

    def __str__(self) -> str:
        return f"({self.maslov}, {self.alexander})"
