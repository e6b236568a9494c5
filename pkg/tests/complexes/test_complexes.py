"""Tests for gridhom.complexes."""

import pytest

from gridhom.algebra import Bigrading, ModuleElement, Monomial
from gridhom.common import GridHomologyError, NotChainMap, NotSubcomplex, VariableClash
from gridhom.complexes import (
    ChainComplex,
    ChainMap,
    ConeComplex,
    adjoin_variables,
    blocked_complex,
    build_minus_complex,
    cone_shift,
    hat_complex,
    identity_map,
    multiplication_map,
    quotient_complex,
    relabel_variables,
    set_variables_equal,
    set_variables_zero,
    subcomplex,
    sum_maps,
    tensor,
)
from gridhom.states import State

U1 = Monomial.var(1)
U2 = Monomial.var(2)


class TestGridComplex:
    """Test GC- of a grid diagram."""

    def test_unknot_differential(self, unknot_complex):
        """Test the two-generator complex of the 2x2 unknot."""
        assert [unknot_complex.format(d) for d in unknot_complex.differential] == [
            "0",
            "U1*[0,1] + U2*[0,1]",
        ]
        assert unknot_complex.gradings == (Bigrading(0, 0), Bigrading(-1, -1))
        assert unknot_complex.variables == (1, 2)

    def test_state_lookup(self, unknot_complex):
        """Test generator ids of states."""
        assert unknot_complex.state_id(State((1, 0))) == 1
        assert unknot_complex.has_label(State((0, 1)))
        assert not unknot_complex.has_label(State((0, 1, 2)))

    @pytest.mark.parametrize(
        "name", ["trefoil_right", "trefoil_left", "stabilized_left4", "unknot_sum6"]
    )
    def test_d_squared_is_zero(self, name, request):
        """Test that the grid differential squares to zero."""
        c = build_minus_complex(request.getfixturevalue(name))
        assert c.d_squared_failures() == []

    @pytest.mark.parametrize("name", ["trefoil_right", "trefoil_left", "stabilized_left4"])
    def test_differential_degree(self, name, request):
        """Test that every boundary lies in bigrading (m - 1, a)."""
        c = build_minus_complex(request.getfixturevalue(name))
        assert c.inhomogeneous_generators() == []

    def test_custom_variable_labels(self, unknot2):
        """Test that O's can carry arbitrary variable names."""
        c = build_minus_complex(unknot2, variable_labels=[7, 3])
        assert c.variables == (3, 7)
        assert c.format(c.differential[1]) == "U3*[0,1] + U7*[0,1]"

    def test_bad_variable_labels(self, unknot2):
        """Test that repeated labels are rejected."""
        with pytest.raises(ValueError, match="need 2 distinct variable labels"):
            build_minus_complex(unknot2, variable_labels=[1, 1])

    def test_lines(self, unknot_complex):
        """Test the M - 2A lines of the generators."""
        assert unknot_complex.lines() == [0, 1]
        assert unknot_complex.generators_on_line(1) == [1]
        assert (unknot_complex.a_max, unknot_complex.a_min) == (0, -1)


class TestSlices:
    """Test finite slices of a complex."""

    def test_slice_basis(self, unknot_complex):
        """Test the terms in bigrading (-2, -1)."""
        assert unknot_complex.slice_basis(-2, -1) == ((U1, 0), (U2, 0))

    def test_slice_matrix(self, unknot_complex):
        """Test the boundary of [1,0] in slice coordinates."""
        s = unknot_complex.slice(-1, -1)
        assert s.dimension == 1
        assert s.images.to_dense().tolist() == [[1, 1]]
        assert s.matrix.to_dense().tolist() == [[1], [1]]

    def test_to_triplets(self, unknot_complex):
        """Test the sparse dump of a slice."""
        assert unknot_complex.slice(-1, -1).to_triplets() == "0 0\n1 0\n"

    def test_vector_and_element(self, unknot_complex):
        """Test coordinates of an element in a slice."""
        s = unknot_complex.slice(-2, -1)
        elem = ModuleElement.generator(0, U2)
        assert s.vector(elem).tolist() == [0, 1]
        assert s.element([1, 1]) == ModuleElement.from_terms([(U1, 0), (U2, 0)])

    def test_slice_above_generators_is_empty(self, unknot_complex):
        """Test that slices above the top Alexander grading are empty."""
        assert unknot_complex.slice(2, 1).dimension == 0

    def test_inhomogeneous_boundary_detected(self):
        """Test that a boundary outside (m - 1, a) is reported."""
        c = ChainComplex(
            ["x", "y"],
            [Bigrading(0, 0), Bigrading(0, 0)],
            [1],
            [ModuleElement.zero(), ModuleElement.generator(0)],
        )
        assert c.inhomogeneous_generators() == [1]
        with pytest.raises(GridHomologyError, match="outside bigrading"):
            c.slice(0, 0)

    def test_length_mismatch(self):
        """Test that generator tables must agree in length."""
        with pytest.raises(ValueError, match="got 2 labels, 1 gradings"):
            ChainComplex(["x", "y"], [Bigrading(0, 0)], [1], [ModuleElement.zero()])

    def test_designated_variable(self, unknot_complex):
        """Test the variable defining the U action."""
        assert unknot_complex.designated_variable == 1
        empty = ChainComplex(["x"], [Bigrading(0, 0)], [], [ModuleElement.zero()])
        with pytest.raises(GridHomologyError, match="no variables"):
            empty.designated_variable


class TestDerivedComplexes:
    """Test complexes built from other complexes."""

    def test_set_variables_equal_cancels(self, unknot_complex):
        """Test that identifying U1 and U2 kills the unknot differential."""
        c = set_variables_equal(unknot_complex, [(1, 2)])
        assert c.variables == (1,)
        assert not c.differential[1]

    def test_set_variables_equal_unknown(self, unknot_complex):
        """Test that unknown variables are rejected."""
        with pytest.raises(VariableClash, match="do not occur"):
            set_variables_equal(unknot_complex, [(1, 9)])

    def test_set_variables_equal_overlap(self, unknot_complex):
        """Test that overlapping classes are rejected."""
        with pytest.raises(VariableClash, match="appears in two classes"):
            set_variables_equal(unknot_complex, [(1, 2), (2,)])

    def test_set_variables_zero(self, unknot_complex):
        """Test killing one variable."""
        c = set_variables_zero(unknot_complex, [1])
        assert c.variables == (2,)
        assert c.differential[1] == ModuleElement.generator(0, U2)

    def test_hat_complex(self, unknot_complex):
        """Test that the hat complex kills the designated variable."""
        assert hat_complex(unknot_complex).differential[1] == ModuleElement.generator(0, U2)

    def test_blocked_complex(self, unknot_complex):
        """Test that the blocked complex has no variables and no U terms."""
        c = blocked_complex(unknot_complex)
        assert c.variables == ()
        assert not any(c.differential)

    def test_relabel_variables(self, unknot_complex):
        """Test renaming variables."""
        c = relabel_variables(unknot_complex, {1: 5})
        assert c.variables == (2, 5)
        assert c.differential[1] == ModuleElement.from_terms(
            [(Monomial.var(5), 0), (U2, 0)]
        )

    def test_relabel_merge_rejected(self, unknot_complex):
        """Test that relabelling may not merge variables."""
        with pytest.raises(VariableClash, match="merges variables"):
            relabel_variables(unknot_complex, {1: 2})

    def test_adjoin_variables(self, unknot_complex):
        """Test extending scalars by an unused variable."""
        c = adjoin_variables(unknot_complex, [3])
        assert c.variables == (1, 2, 3)
        assert c.differential == unknot_complex.differential
        with pytest.raises(VariableClash, match="already occur"):
            adjoin_variables(unknot_complex, [2])

    def test_tensor_over_shared_variable(self, unknot_complex, unknot2):
        """Test the tensor product over one shared variable."""
        other = build_minus_complex(unknot2, variable_labels=[2, 3])
        t = tensor(unknot_complex, other, shared=[2])
        assert len(t) == 4
        assert t.variables == (1, 2, 3)
        assert t.gradings[3] == Bigrading(-2, -2)
        assert t.labels[1] == (State((0, 1)), State((1, 0)))
        assert t.d_squared_failures() == []

    def test_tensor_undeclared_common_variable(self, unknot_complex):
        """Test that common variables must be declared shared."""
        with pytest.raises(VariableClash, match=r"undeclared common variables \[1, 2\]"):
            tensor(unknot_complex, unknot_complex)

    def test_tensor_missing_shared_variable(self, unknot_complex, unknot2):
        """Test that shared variables must occur on both sides."""
        other = build_minus_complex(unknot2, variable_labels=[3, 4])
        with pytest.raises(VariableClash, match=r"shared variables \[2\] missing"):
            tensor(unknot_complex, other, shared=[2])

    def test_subcomplex(self, unknot_complex):
        """Test the subcomplex spanned by a cycle."""
        sub = subcomplex(unknot_complex, [0])
        assert len(sub) == 1
        assert sub.labels == (State((0, 1)),)

    def test_subcomplex_not_closed(self, unknot_complex):
        """Test that a set whose boundary escapes is rejected."""
        with pytest.raises(NotSubcomplex, match=r"boundary of \[1,0\] reaches \[0,1\]"):
            subcomplex(unknot_complex, [1])

    def test_quotient_complex(self, unknot_complex):
        """Test the quotient by the subcomplex spanned by [0,1]."""
        q = quotient_complex(unknot_complex, [0])
        assert q.labels == (State((1, 0)),)
        assert not q.differential[0]
        with pytest.raises(NotSubcomplex):
            quotient_complex(unknot_complex, [1])


class TestChainMaps:
    """Test chain maps and cones."""

    def test_multiplication_map(self, unknot_complex):
        """Test that multiplication by U1 is a chain map of degree (-2, -1)."""
        f = multiplication_map(unknot_complex, U1)
        assert f.degree == Bigrading(-2, -1)
        f.check_homogeneous()
        f.check_chain_map()

    def test_not_a_chain_map(self, unknot_complex):
        """Test that a map ignoring the differential is caught."""
        f = ChainMap(
            unknot_complex,
            unknot_complex,
            [ModuleElement.generator(0), ModuleElement.zero()],
            name="bad",
        )
        assert f.chain_map_failures() == [1]
        with pytest.raises(NotChainMap, match=r"bad does not commute with d at \[1,0\]"):
            f.check_chain_map()

    def test_inhomogeneous_map(self, unknot_complex):
        """Test that images in the wrong bigrading are caught."""
        f = ChainMap(
            unknot_complex,
            unknot_complex,
            [ModuleElement.generator(1), ModuleElement.generator(1)],
            name="shift",
        )
        assert f.inhomogeneous_generators() == [0]
        with pytest.raises(NotChainMap, match="not of degree"):
            f.check_homogeneous()

    def test_image_count(self, unknot_complex):
        """Test that every source generator needs an image."""
        with pytest.raises(ValueError, match="1 images given for 2 source generators"):
            ChainMap(unknot_complex, unknot_complex, [ModuleElement.zero()])

    def test_compose_identity(self, unknot_complex):
        """Test composing with the identity."""
        f = multiplication_map(unknot_complex, U2)
        g = f.compose(identity_map(unknot_complex))
        assert g.images == f.images
        assert g.degree == f.degree

    def test_compose_requires_shared_middle(self, unknot_complex, trefoil_complex):
        """Test that composition needs matching complexes."""
        with pytest.raises(ValueError, match="middle complex"):
            identity_map(unknot_complex).compose(identity_map(trefoil_complex))

    def test_injective_on_slice(self, unknot_complex):
        """Test slice injectivity of the identity and of a zero map."""
        assert identity_map(unknot_complex).is_injective_on_slice(0, 0)
        zero = ChainMap(unknot_complex, unknot_complex, [ModuleElement.zero()] * 2)
        assert not zero.is_injective_on_slice(0, 0)

    def test_cone_of_sum(self, unknot_complex):
        """Test Cone(U1 + U2) on the unknot complex."""
        f = sum_maps(
            multiplication_map(unknot_complex, U1), multiplication_map(unknot_complex, U2)
        )
        c = ConeComplex(f)
        assert len(c) == 4
        assert c.shift == cone_shift(f) == Bigrading(-1, -1)
        assert c.gradings[0] == Bigrading(-1, -1)
        assert c.labels[2] == ("tgt", State((0, 1)))
        assert c.target_element(ModuleElement.generator(1)) == ModuleElement.generator(3)
        assert c.d_squared_failures() == []
        assert c.inhomogeneous_generators() == []

    def test_cone_rejects_non_chain_map(self, unknot_complex):
        """Test that the cone checks its map."""
        f = ChainMap(
            unknot_complex, unknot_complex, [ModuleElement.generator(0), ModuleElement.zero()]
        )
        with pytest.raises(NotChainMap):
            ConeComplex(f)

    def test_cone_variable_clash(self, unknot_complex, unknot2):
        """Test that source variables must land among the target's."""
        other = build_minus_complex(unknot2, variable_labels=[3, 4])
        f = ChainMap(unknot_complex, other, [ModuleElement.zero()] * 2)
        with pytest.raises(VariableClash, match="absent from the target"):
            ConeComplex(f, verify=False)

    def test_sum_maps_degree_mismatch(self, unknot_complex):
        """Test that summed maps need equal degrees."""
        with pytest.raises(ValueError, match="degrees differ"):
            sum_maps(identity_map(unknot_complex), multiplication_map(unknot_complex, U1))
