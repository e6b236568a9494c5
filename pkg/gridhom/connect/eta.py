"""The quasi-isomorphism eta from C to the tensor product of the summand complexes.

The target is GC-(g1) (x) GC-(g2) over the disjoint variable sets
U_1..U_{n-1} (g1) and U_n..U_{2n-2} (g2), modulo the relation
identifying U_1 with the variable of g2's O in its bottom row. These are
the two O2 variables of the destabilizations of g1' (SE) and g2' (NW).

On the states of C, eta follows the classes:

* AD_1 -> 0
* II -> e (x) e
* IN -> (e H_Hex) (x) e
* NI -> e (x) (e H_Hex)
* NN -> (e H_Hex) (x) (e H_Hex)

which is the (target, target) component of D_SE (x) D_NW after the variable
identification. ``eta_composite`` computes it that way, from the two
destabilization maps.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import cached_property

from ..algebra import Bigrading, ModuleElement, Monomial
from ..common import DestabilizationType, NotChainMap, StateClass
from ..complexes import ChainComplex, ChainMap, set_variables_equal, tensor
from ..grid import (
    GridDiagram,
    connect,
    normalize_left,
    normalize_right,
    prepare_summand_left,
    prepare_summand_right,
)
from ..report import VerificationLog
from ..states import State, rectangle_terms
from .classify import ConnectGeometry
from .destabilize import Destabilization
from .subcomplex import ConnectComplex, build_C


class ConnectedSum:
    """
    Two summand diagrams, their connect diagram g#, and the maps between them.

    Args:
        g1, g2: Summand diagrams of equal size n - 1; they are normalized
            so g1 has an X in its top-left square and g2 in its bottom-right.

    Raises:
        SizeMismatch: the summands differ in size.
    """

    def __init__(self, g1: GridDiagram, g2: GridDiagram) -> None:
        self.g1 = normalize_left(g1)
        self.g2 = normalize_right(g2)
        self.g1p = prepare_summand_left(self.g1)
        self.g2p = prepare_summand_right(self.g2)
        self.diagram = connect(self.g1p, self.g2p)
        self.geometry = ConnectGeometry(self.diagram)
        n = self.geometry.n
        self.left = Destabilization(
            self.g1p, DestabilizationType.SE, variable_labels=range(1, n + 1)
        )
        # O1 of g2' is never seen by the target; give it an unused label
        self.right = Destabilization(
            self.g2p,
            DestabilizationType.NW,
            variable_labels=[2 * n - 1] + list(range(n, 2 * n - 1)),
        )
        self.identified = min(self.left.u2, self.right.u2)
        self._identify = {
            v: self.identified for v in (self.left.u2, self.right.u2) if v != self.identified
        }

    @property
    def n(self) -> int:
        return self.geometry.n

    @property
    def size(self) -> int:
        return self.diagram.n

    # variables

    def target_variable(self, label: int) -> int:
        """The target variable of the g# variable ``label`` (1-based column of its O)."""
        n = self.n
        if label in (n, n + 1):
            v = self.identified
        elif label < n:
            v = label
        else:
            v = label - 2
        return self._identify.get(v, v)

    @cached_property
    def variable_map(self) -> dict[int, int]:
        return {k: self.target_variable(k) for k in range(1, self.size + 1)}

    # complexes

    @cached_property
    def target(self) -> ChainComplex:
        """GC-(g1) (x) GC-(g2) with the two O2 variables identified."""
        product = tensor(
            self.left.destabilized_complex,
            self.right.destabilized_complex,
            name="GC-(g1) (x) GC-(g2)",
        )
        return set_variables_equal(
            product, [(self.left.u2, self.right.u2)], name="GC-(g1) (x) GC-(g2) / (U1 = U')"
        )

    @cached_property
    def c(self) -> ConnectComplex:
        return build_C(self.diagram)

    def _pair_id(self, first: int, second: int) -> int:
        return first * len(self.right.destabilized_complex) + second

    def _product(self, first: ModuleElement, second: ModuleElement) -> ModuleElement:
        terms = []
        for m1, g1 in first.terms:
            for m2, g2 in second.terms:
                terms.append(((m1 * m2).relabel(self._identify), self._pair_id(g1, g2)))
        return ModuleElement.from_terms(terms)

    def _e(self, dst: Destabilization, x: State) -> ModuleElement:
        return ModuleElement.generator(dst.destabilized_complex.index(dst.e(x)))

    def _e_hex(self, dst: Destabilization, x: State) -> ModuleElement:
        gc = dst.destabilized_complex
        return ModuleElement.from_terms((m, gc.index(dst.e(y))) for m, y in dst.h_hex(x))

    def eta_state(self, x: State) -> ModuleElement:
        """eta(x) by the class rules."""
        cls = self.geometry.state_class(x)
        if cls is StateClass.AD1:
            return ModuleElement.zero()
        if not cls.in_s0:
            raise ValueError(f"state {x} of class {cls.value} is not a generator of C")
        x1, x2 = self.geometry.split(x)
        left, right = self.left, self.right
        if cls is StateClass.II:
            return self._product(self._e(left, x1), self._e(right, x2))
        if cls is StateClass.IN:
            return self._product(self._e_hex(left, x1), self._e(right, x2))
        if cls is StateClass.NI:
            return self._product(self._e(left, x1), self._e_hex(right, x2))
        return self._product(self._e_hex(left, x1), self._e_hex(right, x2))

    def eta_composite_state(self, x: State) -> ModuleElement:
        """eta(x) as the (target, target) part of D_SE (x) D_NW."""
        cls = self.geometry.state_class(x)
        if not cls.in_s0:
            return ModuleElement.zero()
        x1, x2 = self.geometry.split(x)
        parts = []
        for dst, y in ((self.left, x1), (self.right, x2)):
            d = dst.chain_map
            cone = dst.cone
            image = d.images[dst.source.index(y)]
            parts.append(
                ModuleElement.from_terms(
                    (m, g - cone.source_size) for m, g in image.terms if g >= cone.source_size
                )
            )
        return self._product(parts[0], parts[1])

    def boundary_in_c(self, x: State) -> list[tuple[Monomial, State]]:
        """The grid differential of x in g#, as (monomial, state) terms."""
        return [
            (Monomial.from_variables(c + 1 for c in t.o_columns), t.target)
            for t in rectangle_terms(self.diagram, x)
            if not t.x_columns
        ]

    def eta_commutator(self, x: State) -> ModuleElement:
        """eta(dx) + d(eta(x)), computed without building C."""
        out = self.target.boundary(self.eta_state(x))
        for mono, y in self.boundary_in_c(x):
            out = out + self.eta_state(y).scale(mono.relabel(self.variable_map))
        return out

    def eta_map(self, c: ConnectComplex | None = None) -> ChainMap:
        c = c if c is not None else self.c
        return ChainMap(
            c,
            self.target,
            [self.eta_state(x) for x in c.states],
            variable_map=self.variable_map,
            degree=Bigrading(0, 0),
            name="eta",
        )

    def eta_composite_map(self, c: ConnectComplex | None = None) -> ChainMap:
        c = c if c is not None else self.c
        return ChainMap(
            c,
            self.target,
            [self.eta_composite_state(x) for x in c.states],
            variable_map=self.variable_map,
            name="eta (composite)",
        )

    def target_generator(self, y1: State, y2: State) -> ModuleElement:
        """The generator y1 (x) y2 of the target for states of g1 and g2."""
        return ModuleElement.generator(
            self._pair_id(
                self.left.destabilized_complex.index(y1),
                self.right.destabilized_complex.index(y2),
            )
        )


def eta(
    g1: GridDiagram,
    g2: GridDiagram,
    verify: bool = True,
    jobs: int = 1,
    show_progress: bool = False,
    log: VerificationLog | None = None,
) -> ChainMap:
    """
    eta: C -> GC-(g1) (x) GC-(g2) / (U_1 = U'), built from the summands.

    Raises:
        SizeMismatch: the summands differ in size.
        NotChainMap: eta fails to be a homogeneous chain map.
    """
    cs = ConnectedSum(g1, g2)
    f = cs.eta_map()
    if verify:
        try:
            f.check_homogeneous()
            f.check_chain_map(jobs=jobs, show_progress=show_progress)
        except NotChainMap as exc:
            if log is not None:
                log.log_event("FAIL", str(exc), check="eta", scale=cs.size)
            raise
        if log is not None:
            log.log_event(
                "PASS", f"eta is a chain map on {len(f.source)} generators", check="eta", scale=cs.size
            )
    return f


def eta_composite(g1: GridDiagram, g2: GridDiagram) -> ChainMap:
    """eta computed from D_SE (x) D_NW."""
    return ConnectedSum(g1, g2).eta_composite_map()


def eta_failures(cs: ConnectedSum, states: Iterable[State]) -> list[State]:
    """C states on which eta fails to commute with the differentials."""
    return [x for x in states if cs.eta_commutator(x)]
