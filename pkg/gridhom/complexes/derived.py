"""Complexes built from other complexes."""

from __future__ import annotations

from collections.abc import Collection, Hashable, Iterable, Mapping

from ..algebra import Bigrading, ModuleElement
from ..common import NotSubcomplex, VariableClash
from .chain_complex import ChainComplex


def relabel_variables(c: ChainComplex, mapping: Mapping[int, int], name: str = "") -> ChainComplex:
    """Rename variables injectively; unmapped variables keep their index.

    Raises:
        VariableClash: two variables would receive the same name.
    """
    renamed = [mapping.get(v, v) for v in c.variables]
    if len(set(renamed)) != len(renamed):
        raise VariableClash(f"relabelling {dict(mapping)} merges variables of {c!r}")
    return ChainComplex(
        c.labels,
        c.gradings,
        renamed,
        [d.relabel_variables(mapping) for d in c.differential],
        name=name or c.name,
    )


def set_variables_equal(
    c: ChainComplex, classes: Iterable[Collection[int]], name: str = ""
) -> ChainComplex:
    """
    Identify the variables within each class.

    Each class is replaced by its smallest member. Variables not named in any
    class are left alone, so singleton classes may be omitted.

    Raises:
        VariableClash: a class names an unknown variable, or two classes overlap.
    """
    mapping: dict[int, int] = {}
    known = set(c.variables)
    for cls in classes:
        members = sorted(set(cls))
        if not members:
            continue
        unknown = [v for v in members if v not in known]
        if unknown:
            raise VariableClash(f"variables {unknown} do not occur in {c!r}")
        for v in members:
            if v in mapping:
                raise VariableClash(f"variable U{v} appears in two classes")
            mapping[v] = members[0]
    return ChainComplex(
        c.labels,
        c.gradings,
        {mapping.get(v, v) for v in c.variables},
        [d.relabel_variables(mapping) for d in c.differential],
        name=name or c.name,
    )


def set_variables_zero(c: ChainComplex, zero: Collection[int], name: str = "") -> ChainComplex:
    """The quotient by the ideal generated by the ``zero`` variables."""
    kill = set(zero)
    differential = [
        ModuleElement(frozenset(t for t in d.terms if not kill.intersection(t[0].variables)))
        for d in c.differential
    ]
    return ChainComplex(
        c.labels,
        c.gradings,
        [v for v in c.variables if v not in kill],
        differential,
        name=name or c.name,
    )


def blocked_complex(c: ChainComplex) -> ChainComplex:
    """Every variable set to zero: a finite complex over F_2."""
    return set_variables_zero(c, c.variables, name=f"{c.name} (U=0)")


def hat_complex(c: ChainComplex) -> ChainComplex:
    """The designated variable set to zero."""
    return set_variables_zero(c, [c.designated_variable], name=f"{c.name} (U{c.designated_variable}=0)")


def adjoin_variables(c: ChainComplex, extra: Iterable[int], name: str = "") -> ChainComplex:
    """Extend scalars by free polynomial variables that the differential never uses.

    Raises:
        VariableClash: an adjoined variable is already present.
    """
    extra = list(extra)
    clash = sorted(set(extra) & set(c.variables))
    if clash:
        raise VariableClash(f"variables {clash} already occur in {c!r}")
    return ChainComplex(
        c.labels, c.gradings, list(c.variables) + extra, c.differential, name=name or c.name
    )


def tensor(
    c1: ChainComplex, c2: ChainComplex, shared: Collection[int] = (), name: str = ""
) -> ChainComplex:
    """
    Tensor product over the polynomial ring in the ``shared`` variables.

    Generators are pairs ``(label1, label2)`` ordered lexicographically by
    position, gradings add, and the differential is the Leibniz sum.

    Raises:
        VariableClash: the complexes have a common variable not listed in
            ``shared``, or ``shared`` names a variable missing from one side.
    """
    common = set(c1.variables) & set(c2.variables)
    declared = set(shared)
    if common != declared:
        undeclared = sorted(common - declared)
        missing = sorted(declared - common)
        detail = []
        if undeclared:
            detail.append(f"undeclared common variables {undeclared}")
        if missing:
            detail.append(f"shared variables {missing} missing from a factor")
        raise VariableClash("; ".join(detail))
    n2 = len(c2)
    labels: list[Hashable] = []
    gradings: list[Bigrading] = []
    differential: list[ModuleElement] = []
    for i, (l1, g1) in enumerate(zip(c1.labels, c1.gradings)):
        d1 = c1.differential[i]
        for j, (l2, g2) in enumerate(zip(c2.labels, c2.gradings)):
            labels.append((l1, l2))
            gradings.append(g1.offset(*g2))
            left = d1.map_generators(lambda h, j=j: h * n2 + j)
            right = c2.differential[j].map_generators(lambda h, i=i: i * n2 + h)
            differential.append(left + right)
    return ChainComplex(
        labels,
        gradings,
        set(c1.variables) | set(c2.variables),
        differential,
        name=name or f"{c1.name} (x) {c2.name}",
    )


def _check_closed(c: ChainComplex, keep: set[int]) -> None:
    for g in sorted(keep):
        outside = c.differential[g].generators() - keep
        if outside:
            h = min(outside)
            raise NotSubcomplex(
                f"boundary of {c.labels[g]} reaches {c.labels[h]} outside the generator set"
            )


def subcomplex(c: ChainComplex, generators: Iterable[int], name: str = "") -> ChainComplex:
    """The span of a generator set closed under the differential.

    Labels, order and variables are inherited; ids are renumbered.

    Raises:
        NotSubcomplex: some boundary leaves the set.
    """
    keep = sorted(set(generators))
    keep_set = set(keep)
    _check_closed(c, keep_set)
    new_id = {g: k for k, g in enumerate(keep)}
    return ChainComplex(
        [c.labels[g] for g in keep],
        [c.gradings[g] for g in keep],
        c.variables,
        [c.differential[g].map_generators(new_id.__getitem__) for g in keep],
        name=name or c.name,
    )


def quotient_complex(c: ChainComplex, generators: Iterable[int], name: str = "") -> ChainComplex:
    """The quotient by the subcomplex spanned by ``generators``.

    Raises:
        NotSubcomplex: the generators do not span a subcomplex.
    """
    removed = set(generators)
    _check_closed(c, removed)
    keep = [g for g in range(len(c)) if g not in removed]
    new_id = {g: k for k, g in enumerate(keep)}
    differential = []
    for g in keep:
        terms = (
            (mono, new_id[h]) for mono, h in c.differential[g].terms if h in new_id
        )
        differential.append(ModuleElement.from_terms(terms))
    return ChainComplex(
        [c.labels[g] for g in keep],
        [c.gradings[g] for g in keep],
        c.variables,
        differential,
        name=name or c.name,
    )
