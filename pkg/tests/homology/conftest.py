"""Test fixtures for homology subsystem tests."""

import pytest

from gridhom.algebra import Bigrading, ModuleElement, Monomial
from gridhom.complexes import ChainComplex, build_minus_complex


@pytest.fixture
def summand_complex():
    """
    Factory for one-variable complexes with homology F[U] plus given torsion.

    ``tower`` is the tower bigrading and ``torsion`` a list of
    ``((maslov, alexander), order)``; F[U]/U^k at g comes from a pair
    a, b with d b = U^k a.
    """

    def build(tower, torsion, variable=1):
        labels = ["z"]
        gradings = [Bigrading(*tower)]
        differential = [ModuleElement.zero()]
        for k, (grading, order) in enumerate(torsion):
            top = Bigrading(*grading)
            labels += [f"a{k}", f"b{k}"]
            gradings += [top, top.shifted(order).offset(1, 0)]
            a_id = len(differential)
            differential += [
                ModuleElement.zero(),
                ModuleElement.generator(a_id, Monomial.var(variable, order)),
            ]
        return ChainComplex(labels, gradings, [variable], differential)

    return build


@pytest.fixture
def unknot_complex(unknot2):
    return build_minus_complex(unknot2)


@pytest.fixture
def right_complex(trefoil_right):
    return build_minus_complex(trefoil_right)


@pytest.fixture
def left_complex(trefoil_left):
    return build_minus_complex(trefoil_left)
