"""Tests for hopf_core.py."""

import pytest

from hopfforge.abgroup import FiniteAbelianGroup
from hopfforge.cyclo import CycloNumber
from hopfforge.exceptions import DimensionMismatchError, PreconditionError
from hopfforge.hopf_core import (
    HopfStructure,
    LinearMap,
    antipode_power,
    antipode_square_trace,
    coradical_level1,
    cop_flip,
    dual_hopf,
    embed_13,
    flip,
    group_algebra,
    is_grouplike,
    is_hopf_map,
    is_identity_map,
    skew_primitive_space,
    tensor_product,
    verify_hopf_axioms,
)
from hopfforge.linalg import basis_vector, clean

# Sweedler basis order: 1, g, x, gx
ONE, G, X, GX = 0, 1, 2, 3


def identity_map(H):
    return LinearMap([basis_vector(i) for i in range(H.dimension)], H.dimension, H, H)


@pytest.mark.parametrize("factors", [[2], [3], [2, 2], [4]])
def test_group_algebra_axioms(factors):
    """Test k[G] satisfies every Hopf axiom."""
    K = group_algebra(FiniteAbelianGroup(factors))
    report = verify_hopf_axioms(K)
    assert report.all_passed
    assert K.dimension == FiniteAbelianGroup(factors).order
    assert set(report.checks) == {
        "associativity",
        "unitality",
        "coassociativity",
        "counitality",
        "comultiplication_homomorphism",
        "counit_homomorphism",
        "unit_coalgebra",
        "antipode",
    }


def test_sweedler_axioms(sweedler):
    """Test the built Sweedler algebra satisfies the Hopf axioms."""
    assert verify_hopf_axioms(sweedler.structure).all_passed


def test_multiply_and_comultiply(sweedler):
    """Test a few products and coproducts in Sweedler's algebra."""
    H = sweedler.structure
    assert H.multiply(basis_vector(X), basis_vector(X)) == {}
    assert H.multiply(basis_vector(X), basis_vector(G)) == clean({GX: -1})
    assert H.multiply(basis_vector(G), basis_vector(G)) == basis_vector(ONE)
    assert H.comultiply(basis_vector(X)) == clean({(X, ONE): 1, (G, X): 1})
    assert H.apply_counit(basis_vector(X)) == 0
    assert H.apply_antipode(basis_vector(X)) == clean({GX: -1})
    assert H.power(basis_vector(G), 3) == basis_vector(G)


def test_out_of_range_index(sweedler):
    """Test elements outside the basis are rejected."""
    with pytest.raises(DimensionMismatchError):
        sweedler.structure.multiply({7: CycloNumber.one()}, basis_vector(ONE))


def test_inconsistent_tables():
    """Test structure tables must agree on the dimension."""
    one = CycloNumber.one()
    with pytest.raises(DimensionMismatchError):
        HopfStructure(["a", "b"], {}, {0: one}, [{(0, 0): one}], [one, one], [{0: one}, {1: one}])


def test_broken_antipode_witness(sweedler):
    """Test a wrong antipode is reported at the first failing basis element."""
    H = sweedler.structure
    broken = HopfStructure(
        H.basis_labels,
        H.mult,
        H.unit,
        H.comult,
        H.counit,
        [basis_vector(i) for i in range(H.dimension)],
    )
    report = verify_hopf_axioms(broken)
    assert not report.checks["antipode"].passed
    assert report.checks["antipode"].witness == [X]
    assert report.checks["associativity"].passed


def test_broken_counit_witness(sweedler):
    """Test a wrong counit breaks counitality at x."""
    H = sweedler.structure
    one = CycloNumber.one()
    broken = HopfStructure(
        H.basis_labels, H.mult, H.unit, H.comult, [one] * H.dimension, H.antipode
    )
    report = verify_hopf_axioms(broken)
    assert report.checks["counitality"].witness == [X]
    assert not report.checks["counit_homomorphism"].passed


def test_dual_of_group_algebra():
    """Test k[Z_2]* is a Hopf algebra whose grouplikes are the characters."""
    K = group_algebra(FiniteAbelianGroup([2]))
    dual = dual_hopf(K)
    assert verify_hopf_axioms(dual).all_passed
    assert is_grouplike(dual, clean({0: 1, 1: 1}))
    assert is_grouplike(dual, clean({0: 1, 1: -1}))
    assert not is_grouplike(dual, basis_vector(0))
    assert dual.basis_labels == ("a[0]*", "a[1]*")


def test_double_dual(sweedler):
    """Test dualizing twice gives back the same structure constants."""
    H = sweedler.structure
    dual = dual_hopf(H)
    assert verify_hopf_axioms(dual).all_passed
    double = dual_hopf(dual)
    assert (double.mult, double.unit) == (H.mult, H.unit)
    assert (double.comult, double.counit, double.antipode) == (H.comult, H.counit, H.antipode)


def test_cop_flip(sweedler):
    """Test H^cop is a Hopf algebra with antipode S^{-1}."""
    H = sweedler.structure
    cop = cop_flip(H)
    assert verify_hopf_axioms(cop).all_passed
    assert cop.comult[X] == flip(H.comult[X])
    assert cop.apply_antipode(H.apply_antipode(basis_vector(GX))) == basis_vector(GX)


def test_grouplikes(sweedler):
    """Test grouplike detection."""
    H = sweedler.structure
    assert is_grouplike(H, basis_vector(ONE))
    assert is_grouplike(H, basis_vector(G))
    assert not is_grouplike(H, basis_vector(X))
    assert not is_grouplike(H, clean({ONE: 1, G: 1}))


def test_skew_primitive_space(sweedler):
    """Test P_{1,g} = span{1 - g, x} in Sweedler's algebra."""
    H = sweedler.structure
    space = skew_primitive_space(H, basis_vector(ONE), basis_vector(G))
    assert space == [clean({ONE: 1, G: -1}), basis_vector(X)]
    assert skew_primitive_space(H, basis_vector(G), basis_vector(G)) == []
    assert skew_primitive_space(H, basis_vector(ONE), basis_vector(ONE)) == []


def test_skew_primitive_space_needs_grouplikes(sweedler):
    """Test non-grouplike arguments raise PreconditionError."""
    with pytest.raises(PreconditionError):
        skew_primitive_space(sweedler.structure, basis_vector(X), basis_vector(G))


def test_coradical_level1_sweedler(sweedler):
    """Test A_1 is all of Sweedler's algebra and matches the decomposition."""
    result = coradical_level1(sweedler.structure, sweedler.grouplikes())
    assert result.dimension == 4
    assert result.decomposition_dimension == 4
    assert result.pair_dimensions[(0, 1)] == 2
    assert result.pair_dimensions[(1, 0)] == 2
    assert result.report.all_passed


def test_coradical_level1_h2(h2):
    """Test A_1 of H(2) leaves out x_1 x_2 and its translate."""
    result = coradical_level1(h2.structure, h2.grouplikes())
    assert result.dimension == 6
    assert result.report.all_passed


def test_coradical_level1_preconditions(sweedler):
    """Test dependent or non-grouplike candidates are rejected."""
    H = sweedler.structure
    with pytest.raises(PreconditionError):
        coradical_level1(H, [basis_vector(ONE), basis_vector(ONE)])
    with pytest.raises(PreconditionError):
        coradical_level1(H, [basis_vector(X)])


def test_linear_map_operations(sweedler):
    """Test apply, compose, inverse, rank and matrix."""
    H = sweedler.structure
    S = LinearMap(H.antipode, H.dimension, H, H)
    assert S(basis_vector(X)) == clean({GX: -1})
    assert S.rank() == 4
    assert is_identity_map(S.compose(S.inverse()))
    assert S.matrix()[GX][X] == -1
    with pytest.raises(DimensionMismatchError):
        S({9: CycloNumber.one()})
    with pytest.raises(DimensionMismatchError):
        S.compose(LinearMap([basis_vector(0)], 2))
    with pytest.raises(DimensionMismatchError):
        LinearMap([basis_vector(0)], 2).inverse()


def test_linear_map_apply_tensor(sweedler):
    """Test applying a map to both tensor factors."""
    H = sweedler.structure
    S = LinearMap(H.antipode, H.dimension, H, H)
    assert S.apply_tensor(tensor_product(basis_vector(G), basis_vector(X))) == clean(
        {(G, GX): -1}
    )


def test_antipode_powers(sweedler):
    """Test S^2 != I, S^4 = I and tr(S^2) = 0 in Sweedler's algebra."""
    H = sweedler.structure
    square = antipode_power(H, 2)
    assert not is_identity_map(square)
    assert square(basis_vector(X)) == clean({X: -1})
    assert is_identity_map(antipode_power(H, 4))
    assert is_identity_map(antipode_power(H, 0))
    assert antipode_square_trace(H) == 0


def test_antipode_of_group_algebra_is_involutive():
    """Test S^2 = I on k[G]."""
    K = group_algebra(FiniteAbelianGroup([3]))
    assert is_identity_map(antipode_power(K, 2))
    assert antipode_square_trace(K) == 3


def test_is_hopf_map(sweedler):
    """Test the identity is a Hopf map and fails against H^cop."""
    H = sweedler.structure
    assert is_hopf_map(H, H, identity_map(H)).all_passed
    report = is_hopf_map(H, cop_flip(H), identity_map(H))
    assert report.checks["multiplicative"].passed
    assert not report.checks["comultiplicative"].passed
    assert report.checks["comultiplicative"].witness == [X]


def test_is_hopf_map_shape(sweedler):
    """Test shape mismatches raise DimensionMismatchError."""
    K = group_algebra(FiniteAbelianGroup([2]))
    with pytest.raises(DimensionMismatchError):
        is_hopf_map(sweedler.structure, K, identity_map(sweedler.structure))


def test_tensor_helpers():
    """Test flip and leg embeddings."""
    one = CycloNumber.one()
    R = {(0, 1): one}
    assert flip(R) == {(1, 0): one}
    assert embed_13(R, {2: one}) == {(0, 2, 1): one}
