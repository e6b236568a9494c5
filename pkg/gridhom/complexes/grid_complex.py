"""The minus grid complex of a diagram."""

from __future__ import annotations

from collections.abc import Sequence

from ..algebra import Bigrading, ModuleElement, Monomial
from ..common import progress
from ..grid import GridDiagram
from ..states import GradingCalculator, State, enumerate_states, rectangle_terms
from .chain_complex import ChainComplex


class GridComplex(ChainComplex):
    """
    GC^-(d): generated by all n! states over F_2[U_1..U_n].

    The O in column ``i`` carries variable ``variable_labels[i]``
    (``i + 1`` unless told otherwise). Labels are the states themselves.
    """

    def __init__(
        self,
        diagram: GridDiagram,
        states: Sequence[State],
        gradings: Sequence[Bigrading],
        differential: Sequence[ModuleElement],
        variable_labels: Sequence[int],
        name: str = "",
    ) -> None:
        super().__init__(states, gradings, variable_labels, differential, name=name)
        self.diagram = diagram
        self.states: tuple[State, ...] = tuple(states)
        self.variable_labels: tuple[int, ...] = tuple(variable_labels)

    def state_id(self, x: State) -> int:
        return self.index(x)


def rectangle_differential(
    d: GridDiagram,
    x: State,
    index: dict[State, int],
    variable_labels: Sequence[int],
) -> ModuleElement:
    """Sum over empty X-free rectangles out of ``x`` of U^{O content} * target."""
    terms = []
    for t in rectangle_terms(d, x):
        if t.x_columns:
            continue
        mono = Monomial.from_variables(variable_labels[c] for c in t.o_columns)
        terms.append((mono, index[t.target]))
    return ModuleElement.from_terms(terms)


def build_minus_complex(
    d: GridDiagram,
    variable_labels: Sequence[int] | None = None,
    name: str = "",
    show_progress: bool = False,
) -> GridComplex:
    """
    Build GC^-(d).

    Args:
        d: A valid grid diagram.
        variable_labels: Variable index of the O in each column; defaults to
            ``1..n``.
        name: Label for reports.
        show_progress: Show a progress bar over states.

    Example:
        >>> from gridhom.grid import parse_text
        >>> c = build_minus_complex(parse_text("OX\\nXO"))
        >>> [c.format(dx) for dx in c.differential]
        ['0', 'U1*[0,1] + U2*[0,1]']
    """
    labels = tuple(range(1, d.n + 1)) if variable_labels is None else tuple(variable_labels)
    if len(labels) != d.n or len(set(labels)) != d.n:
        raise ValueError(f"need {d.n} distinct variable labels, got {list(labels)}")
    states = list(enumerate_states(d))
    index = {x: i for i, x in enumerate(states)}
    gradings = GradingCalculator(d).bigradings(states)
    differential = [
        rectangle_differential(d, x, index, labels)
        for x in progress(states, show_progress, len(states), "differential")
    ]
    return GridComplex(d, states, gradings, differential, labels, name=name or f"GC-({d.n}x{d.n})")
