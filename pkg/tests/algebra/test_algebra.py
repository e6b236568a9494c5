"""Tests for gridhom.algebra."""

import numpy as np
import pytest

from gridhom.algebra import (
    BigradedUModule,
    Bigrading,
    EchelonBasis,
    F2Matrix,
    ModuleElement,
    Monomial,
    TorsionSummand,
    monomials_of_degree,
    pack_bits,
    tensor_and_tor,
    unpack_bits,
)


class TestBigrading:
    """Test Bigrading arithmetic."""

    def test_shifted_lowers_by_two_one_per_degree(self):
        """Test that multiplying by a degree-k monomial lowers (M, A) by (2k, k)."""
        assert Bigrading(0, 0).shifted(2) == Bigrading(-4, -2)

    def test_line_is_invariant_under_shift(self):
        """Test that M - 2A is unchanged by U multiplication."""
        g = Bigrading(3, 1)
        assert g.shifted(5).line == g.line == 1

    def test_str(self):
        """Test the printed form."""
        assert str(Bigrading(-1, 2)) == "(-1, 2)"


class TestMonomial:
    """Test Monomial construction and arithmetic."""

    def test_product_and_str(self):
        """Test that products merge exponents."""
        m = Monomial.var(1) * Monomial.var(2, 2)
        assert str(m) == "U1U2^2"
        assert m.degree == 3

    def test_one_is_unit(self):
        """Test the unit monomial."""
        m = Monomial.var(3)
        assert Monomial.one() * m == m
        assert str(Monomial.one()) == "1"
        assert Monomial.one().is_one()

    def test_var_power_zero_is_one(self):
        """Test that U^0 is the unit."""
        assert Monomial.var(4, 0) == Monomial.one()

    def test_var_negative_power_raises(self):
        """Test that negative powers are rejected."""
        with pytest.raises(ValueError, match="power must be >= 0"):
            Monomial.var(1, -1)

    def test_from_exponents_drops_zeros(self):
        """Test that zero exponents disappear."""
        assert Monomial.from_exponents({1: 0, 2: 1}) == Monomial.var(2)

    def test_from_exponents_negative_raises(self):
        """Test that negative exponents are rejected."""
        with pytest.raises(ValueError, match="non-negative"):
            Monomial.from_exponents({1: -2})

    def test_from_variables_counts_repeats(self):
        """Test that repeated variables raise the exponent."""
        m = Monomial.from_variables([2, 1, 2])
        assert m.exponent(2) == 2
        assert m.exponent(1) == 1
        assert m.exponent(5) == 0

    def test_without(self):
        """Test that without removes one variable entirely."""
        m = Monomial.var(1, 3) * Monomial.var(2)
        assert m.without(1) == Monomial.var(2)

    def test_relabel_merges_variables(self):
        """Test that relabelling two variables onto one adds their exponents."""
        m = Monomial.var(1) * Monomial.var(2, 2)
        assert m.relabel({2: 1}) == Monomial.var(1, 3)

    def test_monomials_of_degree_count(self):
        """Test the number of degree-2 monomials in three variables."""
        assert len(monomials_of_degree((1, 2, 3), 2)) == 6
        assert monomials_of_degree((1, 2), 0) == (Monomial.one(),)
        assert monomials_of_degree((1, 2), -1) == ()


class TestModuleElement:
    """Test ModuleElement over F_2."""

    def test_terms_cancel_in_pairs(self):
        """Test that equal terms cancel."""
        u = Monomial.var(1)
        elem = ModuleElement.from_terms([(u, 0), (u, 0), (u, 1)])
        assert elem == ModuleElement.generator(1, u)

    def test_addition_is_symmetric_difference(self):
        """Test that x + x = 0."""
        x = ModuleElement.generator(3)
        assert not (x + x)
        assert x + ModuleElement.zero() == x

    def test_scale(self):
        """Test monomial scaling of every term."""
        x = ModuleElement.generator(0) + ModuleElement.generator(1, Monomial.var(2))
        scaled = x.scale(Monomial.var(2))
        assert scaled == ModuleElement.from_terms(
            [(Monomial.var(2), 0), (Monomial.var(2, 2), 1)]
        )

    def test_relabel_can_cancel(self):
        """Test that identifying variables can make terms cancel."""
        x = ModuleElement.from_terms([(Monomial.var(1), 0), (Monomial.var(2), 0)])
        assert not x.relabel_variables({2: 1})

    def test_homogeneous_bigrading(self):
        """Test bigrading of a homogeneous element."""
        table = [Bigrading(0, 0), Bigrading(-2, -1)]
        x = ModuleElement.generator(0, Monomial.var(1)) + ModuleElement.generator(1)
        assert x.homogeneous_bigrading(table) == Bigrading(-2, -1)
        assert ModuleElement.zero().homogeneous_bigrading(table) is None

    def test_inhomogeneous_raises(self):
        """Test that mixed bigradings are reported."""
        table = [Bigrading(0, 0), Bigrading(-1, -1)]
        x = ModuleElement.generator(0) + ModuleElement.generator(1)
        with pytest.raises(ValueError, match="not homogeneous"):
            x.homogeneous_bigrading(table)

    def test_format(self):
        """Test the printed form of an element."""
        x = ModuleElement.generator(0, Monomial.var(1)) + ModuleElement.generator(1)
        assert x.format(lambda g: f"g{g}") == "g1 + U1*g0"
        assert ModuleElement.zero().format() == "0"


class TestF2Matrix:
    """Test bit-packed F_2 matrices."""

    def test_rank_of_repeated_rows(self):
        """Test that equal rows have rank one."""
        assert F2Matrix.from_dense([[1, 1], [1, 1]]).rank() == 1

    def test_rank_of_wide_identity(self):
        """Test rank across several packed words."""
        assert F2Matrix.identity(130).rank() == 130

    def test_kernel_is_annihilated(self):
        """Test that kernel vectors map to zero and rank-nullity holds."""
        m = F2Matrix.from_dense([[1, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 1]])
        result = m.rank_kernel_image()
        assert result.rank == 2
        assert result.kernel.rows == m.cols - result.rank
        assert m.matmul(result.kernel.transpose()).is_zero()
        assert result.image.rows == 2

    def test_from_support_cancels_repeats(self):
        """Test that repeated column indices cancel."""
        m = F2Matrix.from_support(3, [[0, 2, 2], [1]])
        assert m.row_support(0) == [0]
        assert m.row_support(1) == [1]

    def test_transpose_and_matmul(self):
        """Test transpose and product over F_2."""
        m = F2Matrix.from_dense([[1, 1], [0, 1]])
        assert m.transpose() == F2Matrix.from_dense([[1, 0], [1, 1]])
        assert m @ m == F2Matrix.identity(2)

    def test_matmul_shape_mismatch_raises(self):
        """Test incompatible shapes are rejected."""
        with pytest.raises(ValueError, match="cannot multiply"):
            F2Matrix.zeros(2, 3).matmul(F2Matrix.zeros(2, 3))

    def test_pack_unpack(self):
        """Test that unpacking restores a 70-column row."""
        row = np.zeros((1, 70), dtype=np.uint8)
        row[0, [0, 63, 64, 69]] = 1
        assert np.array_equal(unpack_bits(pack_bits(row), 70), row)

    def test_empty_matrix(self):
        """Test rank and kernel of a matrix with no rows."""
        m = F2Matrix.zeros(0, 3)
        result = m.rank_kernel_image()
        assert result.rank == 0
        assert result.kernel == F2Matrix.identity(3)


class TestEchelonBasis:
    """Test the incremental echelon basis."""

    def test_extend_reports_independent_rows(self):
        """Test that a dependent row is not added."""
        basis = EchelonBasis(3)
        added = basis.extend(pack_bits([[1, 1, 0], [0, 1, 1], [1, 0, 1]], 3))
        assert sorted(added) == [0, 1]
        assert len(basis) == 2

    def test_contains(self):
        """Test span membership."""
        basis = EchelonBasis(3)
        basis.extend(pack_bits([[1, 1, 0], [0, 1, 1]], 3))
        hits = basis.contains(pack_bits([[1, 0, 1], [1, 0, 0]], 3))
        assert hits.tolist() == [True, False]


class TestBigradedUModule:
    """Test module isomorphism types."""

    def test_right_trefoil_hat_dimensions(self):
        """Test that F[U] + F[U]/U gives three hat classes."""
        module = BigradedUModule.free(-2, -1).with_torsion(0, 1, 1)
        assert module.hat_dimensions() == {
            Bigrading(-2, -1): 1,
            Bigrading(-1, 0): 1,
            Bigrading(0, 1): 1,
        }

    def test_tau(self):
        """Test that tau is minus the tower's Alexander grading."""
        assert BigradedUModule.free(-2, -1).tau == 1
        assert BigradedUModule.free(2, 1).tau == -1

    def test_dimension(self):
        """Test dimensions along a tower and a torsion summand."""
        module = BigradedUModule.free(0, 0).with_torsion(0, 1, 2)
        assert module.dimension(-2, -1) == 1
        assert module.dimension(1, 0) == 0
        assert module.dimension(0, 1) == 1
        assert module.dimension(-2, 0) == 1
        assert module.dimension(-4, -1) == 0
        assert module.dimension(-4, -2) == 1

    def test_torsion_order_must_be_positive(self):
        """Test that F[U]/U^0 is rejected."""
        with pytest.raises(ValueError, match="torsion order must be >= 1"):
            TorsionSummand(Bigrading(0, 0), 0)

    def test_tower_bigrading_requires_one_tower(self):
        """Test that a module with two towers has no tau."""
        module = BigradedUModule((Bigrading(0, 0), Bigrading(-1, 0)))
        with pytest.raises(ValueError, match="expected exactly one"):
            module.tau

    def test_order_independent_equality(self):
        """Test that summand order does not matter."""
        a = BigradedUModule.free(0, 0).with_torsion(0, 1, 1).with_torsion(2, 1, 2)
        b = BigradedUModule.free(0, 0).with_torsion(2, 1, 2).with_torsion(0, 1, 1)
        assert a == b


class TestTensorAndTor:
    """Test the algebraic Kunneth formula."""

    def test_unknot_is_unit(self):
        """Test that the unknot module is a unit for the product."""
        trefoil = BigradedUModule.free(-2, -1).with_torsion(0, 1, 1)
        assert tensor_and_tor(BigradedUModule.free(0, 0), trefoil) == trefoil

    def test_trefoil_square(self):
        """Test the product of two right-handed trefoil modules."""
        trefoil = BigradedUModule.free(-2, -1).with_torsion(0, 1, 1)
        expected = (
            BigradedUModule.free(-4, -2)
            .with_torsion(-2, 0, 1)
            .with_torsion(-2, 0, 1)
            .with_torsion(0, 2, 1)
            .with_torsion(-1, 1, 1)
        )
        assert tensor_and_tor(trefoil, trefoil) == expected

    def test_tau_adds(self):
        """Test that tau of the product is the sum."""
        a = BigradedUModule.free(-2, -1).with_torsion(0, 1, 1)
        b = BigradedUModule.free(2, 1).with_torsion(1, 0, 1)
        assert tensor_and_tor(a, b).tau == 0

    def test_requires_single_towers(self):
        """Test that link-like modules are rejected."""
        two = BigradedUModule((Bigrading(0, 0), Bigrading(-1, 0)))
        with pytest.raises(ValueError, match="first argument has 2 towers"):
            tensor_and_tor(two, BigradedUModule.free())
