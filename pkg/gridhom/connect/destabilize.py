"""Destabilization of a stabilized diagram g' onto its destabilized diagram g.

The states of g' split into I (states containing the corner c of the
stabilization) and N. Deleting c and collapsing the column and row of O1
identifies I with the states of g; this is the map e. Together with the
counts H_O1 (rectangles through O1) and H_Hex (hexagons through O1 and X1)
it gives the chain map

    D: GC-(g') -> Cone(U_O1 + U_O2 on GC-(g)[U_O1])

sending x in N to (e H_O1 x, e H_Hex x) and x in I to (0, e x).

Variables keep the labels of the columns of g' throughout: GC-(g) is built
with the labels of the g' columns its O's come from, and U_O1 is adjoined.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

from ..algebra import ModuleElement, Monomial
from ..common import DestabilizationType, ZeroBlockViolated
from ..complexes import (
    ChainMap,
    ConeComplex,
    GridComplex,
    adjoin_variables,
    build_minus_complex,
    multiplication_map,
    sum_maps,
)
from ..grid import GridDiagram, MarkingLabels, canonical_marking_labels, destabilized_diagram
from ..report import VerificationLog
from ..states import State, rectangle_terms
from .hexagons import Hexagon, hexagon_contents, hexagons_from

Term = tuple[Monomial, State]


@dataclass
class Destabilization:
    """
    A stabilized diagram with its marking labels and destabilized diagram.

    Args:
        stabilized: The diagram g'.
        kind: SE or NW; found automatically when omitted.
        variable_labels: Variable of the O in each column of g' (``1..n`` by default).
    """

    stabilized: GridDiagram
    kind: DestabilizationType | None = None
    variable_labels: Sequence[int] | None = None
    labels: MarkingLabels = field(init=False)
    destabilized: GridDiagram = field(init=False)

    def __post_init__(self) -> None:
        n = self.stabilized.n
        self.labels = canonical_marking_labels(self.stabilized, self.kind)
        self.kind = self.labels.kind
        if self.variable_labels is None:
            self.variable_labels = tuple(range(1, n + 1))
        self.variable_labels = tuple(self.variable_labels)
        self.destabilized = destabilized_diagram(self.stabilized, self.labels)

    # geometry

    @property
    def n(self) -> int:
        return self.stabilized.n

    @property
    def corner(self) -> tuple[int, int]:
        return self.labels.corner

    @property
    def o1_column(self) -> int:
        return self.labels.o1[0]

    @property
    def u1(self) -> int:
        """Variable of O1."""
        assert self.variable_labels is not None
        return self.variable_labels[self.o1_column]

    @property
    def u2(self) -> int:
        """Variable of O2."""
        assert self.variable_labels is not None
        return self.variable_labels[self.labels.o2[0]]

    @cached_property
    def destabilized_labels(self) -> tuple[int, ...]:
        """Variable of the O in each column of g, inherited from g'."""
        assert self.variable_labels is not None
        r = self.o1_column
        return tuple(lab for i, lab in enumerate(self.variable_labels) if i != r)

    def in_i(self, x: State) -> bool:
        return x.contains(self.corner)

    def _collapse(self, k: int, removed: int) -> int:
        return (k if k <= removed else k - 1) % (self.n - 1)

    def e(self, x: State) -> State:
        """
        The state of g obtained by forgetting the corner of an I state.

        Raises:
            ValueError: x does not contain the corner.
        """
        if not self.in_i(x):
            raise ValueError(f"state {x} does not contain the corner {self.corner}")
        r, s = self.labels.o1
        cx = self.corner[0]
        points = [
            (self._collapse(px, r), self._collapse(py, s))
            for px, py in x.points()
            if px != cx
        ]
        return State.from_points(points, self.n - 1)

    def e_inverse(self, y: State) -> State:
        """The I state of g' that ``e`` sends to y."""
        n = self.n
        r, s = self.labels.o1
        cx, cy = self.corner
        columns = [v for v in range(n) if v != cx]
        rows = [h for h in range(n) if h != cy]
        col_of = {self._collapse(v, r): v for v in columns}
        row_of = {self._collapse(h, s): h for h in rows}
        points = [(cx, cy)] + [(col_of[px], row_of[py]) for px, py in y.points()]
        return State.from_points(points, n)

    def split_states(self, states: Sequence[State]) -> tuple[list[State], list[State]]:
        i_part = [x for x in states if self.in_i(x)]
        n_part = [x for x in states if not self.in_i(x)]
        return i_part, n_part

    # counts

    def _monomial(self, o_columns: frozenset[int]) -> Monomial:
        assert self.variable_labels is not None
        r = self.o1_column
        return Monomial.from_variables(self.variable_labels[c] for c in o_columns if c != r)

    def h_o1(self, x: State) -> list[Term]:
        """Empty X-free rectangles from x through O1 into I; O1's exponent dropped."""
        if self.in_i(x):
            return []
        r = self.o1_column
        return [
            (self._monomial(t.o_columns), t.target)
            for t in rectangle_terms(self.stabilized, x)
            if not t.x_columns and r in t.o_columns and self.in_i(t.target)
        ]

    def hexagons(self, x: State, y: State | None = None) -> list[Hexagon]:
        """Empty hexagons out of x at the corner whose X content is exactly X1."""
        x1_column = self.labels.x1[0]
        out = []
        for h in hexagons_from(x, self.corner):
            if y is not None and h.target != y:
                continue
            o_cols, x_cols = hexagon_contents(self.stabilized, h)
            if x_cols == {x1_column} and self.o1_column in o_cols:
                out.append(h)
        return out

    def h_hex(self, x: State) -> list[Term]:
        if self.in_i(x):
            return []
        return [
            (self._monomial(hexagon_contents(self.stabilized, h)[0]), h.target)
            for h in self.hexagons(x)
        ]

    # complexes

    @cached_property
    def source(self) -> GridComplex:
        """GC-(g')."""
        return build_minus_complex(
            self.stabilized, self.variable_labels, name=f"GC-(g', {self.labels.kind.value})"
        )

    @cached_property
    def destabilized_complex(self) -> GridComplex:
        """GC-(g) with variables labelled by g' columns."""
        return build_minus_complex(
            self.destabilized, self.destabilized_labels, name=f"GC-(g, {self.labels.kind.value})"
        )

    @cached_property
    def cone(self) -> ConeComplex:
        """Cone(U_O1 + U_O2) on GC-(g)[U_O1]."""
        base = adjoin_variables(self.destabilized_complex, [self.u1], name="GC-(g)[U1]")
        f = sum_maps(
            multiplication_map(base, Monomial.var(self.u1)),
            multiplication_map(base, Monomial.var(self.u2)),
            name=f"U{self.u1} + U{self.u2}",
        )
        return ConeComplex(f, verify=False)

    def _element(self, terms: list[Term]) -> ModuleElement:
        gc = self.destabilized_complex
        return ModuleElement.from_terms((m, gc.index(self.e(y))) for m, y in terms)

    def image(self, x: State) -> ModuleElement:
        """D(x) in the cone."""
        cone = self.cone
        if self.in_i(x):
            return cone.target_element(self._element([(Monomial.one(), x)]))
        source_part = self._element(self.h_o1(x))
        target_part = cone.target_element(self._element(self.h_hex(x)))
        return source_part + target_part

    def target_component(self, x: State) -> ModuleElement:
        """The GC-(g) component of D(x): e(x) on I, e H_Hex(x) on N."""
        if self.in_i(x):
            return self._element([(Monomial.one(), x)])
        return self._element(self.h_hex(x))

    @cached_property
    def chain_map(self) -> ChainMap:
        src = self.source
        return ChainMap(
            src,
            self.cone,
            [self.image(x) for x in src.states],
            name=f"D_{self.labels.kind.value}",
        )

    def check_zero_block(self, log: VerificationLog | None = None) -> None:
        """
        Raises:
            ZeroBlockViolated: the differential of an I state reaches N.
        """
        src = self.source
        for g, x in enumerate(src.states):
            if not self.in_i(x):
                continue
            for _, h in src.differential[g].terms:
                if not self.in_i(src.states[h]):
                    if log is not None:
                        log.log_event("FAIL", f"I -> N block nonzero at {x}", check="split_IN")
                    raise ZeroBlockViolated(
                        f"boundary of I state {x} reaches N state {src.states[h]}"
                    )
        if log is not None:
            log.log_event("PASS", "differential preserves I", check="split_IN")


@dataclass(frozen=True)
class INSplit:
    """The partition of the states of g' by membership of the corner."""

    destabilization: Destabilization
    i_states: tuple[State, ...]
    n_states: tuple[State, ...]


def split_IN(
    g: GridDiagram,
    kind: DestabilizationType | None = None,
    log: VerificationLog | None = None,
) -> INSplit:
    """
    Split the states of a stabilized diagram into I and N.

    Raises:
        NotStabilized: no stabilization pattern of the requested kind.
        ZeroBlockViolated: the differential has an I -> N component.
    """
    dst = Destabilization(g, kind)
    dst.check_zero_block(log)
    i_part, n_part = dst.split_states(dst.source.states)
    return INSplit(dst, tuple(i_part), tuple(n_part))


def hexagons(g: GridDiagram, x: State, y: State, kind: DestabilizationType | None = None) -> list[Hexagon]:
    """Empty hexagons counted by H_Hex from x to y."""
    return Destabilization(g, kind).hexagons(x, y)


def H_O1(g: GridDiagram, x: State, kind: DestabilizationType | None = None) -> ModuleElement:
    """H_O1(x) as an element of GC-(g') (generators are g' states)."""
    dst = Destabilization(g, kind)
    return ModuleElement.from_terms((m, dst.source.index(y)) for m, y in dst.h_o1(x))


def H_Hex(g: GridDiagram, x: State, kind: DestabilizationType | None = None) -> ModuleElement:
    dst = Destabilization(g, kind)
    return ModuleElement.from_terms((m, dst.source.index(y)) for m, y in dst.h_hex(x))


def destabilize(
    g: GridDiagram,
    kind: DestabilizationType,
    verify: bool = True,
    log: VerificationLog | None = None,
) -> ChainMap:
    """
    The destabilization map D: GC-(g') -> Cone(U1 + U2 on GC-(g)[U1]).

    Raises:
        NotStabilized: g has no stabilization of this kind.
        NotChainMap: D fails to commute with the differentials.
    """
    dst = Destabilization(g, kind)
    d = dst.chain_map
    if verify:
        try:
            d.check_homogeneous()
            d.check_chain_map()
        except Exception as exc:
            if log is not None:
                log.log_event("FAIL", str(exc), check=d.name)
            raise
        if log is not None:
            log.log_event("PASS", f"{d.name} is a homogeneous chain map", check=d.name)
    return d
