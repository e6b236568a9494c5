from __future__ import annotations

from ..algebra import Bigrading, ModuleElement
from ..common import VariableClash
from .chain_complex import DIFFERENTIAL_DEGREE, ChainComplex
from .chain_map import ChainMap

SOURCE = "src"
TARGET = "tgt"


class ConeComplex(ChainComplex):
    """
    The mapping cone of a chain map f: A -> B.

    Generators are ``("src", a)`` for a in A and ``("tgt", b)`` for b in B,
    with differential ``d(a) = d_A(a) + f(a)`` and ``d(b) = d_B(b)``. The
    source copy is shifted by ``degree(f) + (1, 0)`` so the total
    differential has degree (-1, 0); for multiplication by U_1 - U_2 the
    shift is (-1, -1) and for a degree (-1, 0) map there is none.

    Raises:
        NotChainMap: f does not commute with the differentials.
        VariableClash: a source variable has no image among the target's.
    """

    def __init__(self, f: ChainMap, name: str = "", verify: bool = True) -> None:
        if verify:
            f.check_chain_map()
        src, tgt = f.source, f.target
        mapped = {f.variable_map.get(v, v) for v in src.variables}
        missing = sorted(mapped - set(tgt.variables))
        if missing:
            raise VariableClash(f"source variables map to {missing}, absent from the target")
        self.map = f
        self.shift = f.degree.offset(-DIFFERENTIAL_DEGREE.maslov, -DIFFERENTIAL_DEGREE.alexander)
        offset = len(src)
        labels = [(SOURCE, lab) for lab in src.labels] + [(TARGET, lab) for lab in tgt.labels]
        gradings = [g.offset(*self.shift) for g in src.gradings] + list(tgt.gradings)
        differential: list[ModuleElement] = []
        for g in range(len(src)):
            own = src.differential[g]
            if f.variable_map:
                own = own.relabel_variables(f.variable_map)
            differential.append(own + f.images[g].map_generators(lambda h: h + offset))
        for g in range(len(tgt)):
            differential.append(tgt.differential[g].map_generators(lambda h: h + offset))
        super().__init__(labels, gradings, tgt.variables, differential, name=name or f"Cone({f.name})")
        self.source_size = offset

    def target_id(self, g: int) -> int:
        return g + self.source_size

    def target_element(self, element: ModuleElement) -> ModuleElement:
        return element.map_generators(self.target_id)


def cone(f: ChainMap, name: str = "") -> ConeComplex:
    return ConeComplex(f, name=name)


def cone_shift(f: ChainMap) -> Bigrading:
    """Grading shift applied to the source copy in ``Cone(f)``."""
    return f.degree.offset(1, 0)
