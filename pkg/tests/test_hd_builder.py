"""Tests for hd_builder.py."""

import random

import pytest

from hopfforge.exceptions import BoundExceededError, DatumValidationError
from hopfforge.hd_builder import (
    GeneratorSymbol,
    HDBasisLabel,
    build_hd,
    label_string,
    normalize_word,
    projection_and_biproduct,
    validate_datum,
    verify_relations,
)
from hopfforge.hopf_core import (
    coradical_level1,
    is_grouplike,
    skew_primitive_space,
    verify_hopf_axioms,
)
from hopfforge.linalg import basis_vector, rank
from hopfforge.models.engine_bounds import EngineBoundsModel

X = GeneratorSymbol((1,), 1)
X1 = GeneratorSymbol((1,), 1)
X2 = GeneratorSymbol((1,), 2)


def random_word(rng, datum, symbols, length):
    elements = datum.group.elements()
    word = []
    for _ in range(length):
        if symbols and rng.random() < 0.6:
            word.append(rng.choice(symbols))
        else:
            word.append(rng.choice(elements))
    return word


def test_datum_properties(z2xz2_datum, z4xz4_datum):
    """Test derived quantities of a datum."""
    assert z2xz2_datum.i_f_prime == [(0, 1), (1, 0)]
    assert z2xz2_datum.generator_count == 2
    assert z2xz2_datum.dimension == 16
    assert z4xz4_datum.n_of((3, 0)) == 0
    assert z4xz4_datum.dimension == 32


def test_datum_equality_ignores_zero_multiplicities(datum_factory):
    """Test keys with n_g = 0 do not distinguish data."""
    assert datum_factory([2], [[1]], {(1,): 0}) == datum_factory([2], [[1]])
    assert datum_factory([2], [[1]], {(1,): 1}) != datum_factory([2], [[1]])


@pytest.mark.parametrize(
    "fixture, dimension",
    [("h0_datum", 2), ("sweedler_datum", 4), ("h2_datum", 8), ("z2xz2_datum", 16)],
)
def test_build_dimensions(request, fixture, dimension):
    """Test dim H(D) = |G| 2^(sum n_g) on the standard data."""
    hd = build_hd(request.getfixturevalue(fixture))
    assert hd.dimension == dimension
    assert len(hd.labels) == dimension


@pytest.mark.parametrize(
    "factors, matrix, n",
    [
        ([2], [[1]], {}),
        ([2], [[1]], {(1,): 1}),
        ([2], [[1]], {(1,): 2}),
        ([2], [[1]], {(1,): 3}),
        ([2, 2], [[0, 1], [1, 0]], {}),
        ([2, 2], [[1, 0], [0, 1]], {(1, 0): 1}),
        ([2, 2], [[1, 0], [0, 1]], {(1, 0): 1, (0, 1): 1}),
        ([2, 2], [[1, 0], [0, 1]], {(1, 0): 2, (0, 1): 1}),
        ([2, 2], [[0, 1], [1, 1]], {(0, 1): 1, (1, 1): 1}),
        ([4, 4], [[2, 1], [3, 2]], {}),
        pytest.param([4, 4], [[2, 1], [3, 2]], {(1, 0): 1}, marks=pytest.mark.slow),
        pytest.param(
            [4, 4], [[2, 1], [3, 2]], {(1, 0): 1, (3, 0): 1}, marks=pytest.mark.slow
        ),
    ],
)
def test_dimension_law(datum_factory, factors, matrix, n):
    """Test dim H(D) = |G| 2^(sum n_g) across Z_2, Z_2 x Z_2 and Z_4 x Z_4."""
    datum = datum_factory(factors, matrix, n)
    assert validate_datum(datum).valid
    hd = build_hd(datum)
    assert hd.dimension == datum.group.order * 2 ** sum(n.values())
    assert verify_hopf_axioms(hd.structure).all_passed
    assert verify_relations(hd).all_passed


@pytest.mark.parametrize("fixture", ["sweedler", "h2", "z2xz2"])
def test_grouplikes_are_the_group(request, fixture):
    """Test exactly the group labels are grouplike and they are independent."""
    hd = request.getfixturevalue(fixture)
    grouplike = [
        index
        for index in range(hd.dimension)
        if is_grouplike(hd.structure, basis_vector(index))
    ]
    assert [hd.labels[index].wedge_part for index in grouplike] == [()] * hd.datum.group.order
    assert rank(hd.grouplikes()) == hd.datum.group.order


@pytest.mark.parametrize("fixture", ["sweedler", "h2", "z2xz2"])
def test_skew_primitive_dimensions(request, fixture):
    """Test dim P_{a,b} = 1 + n_{a^-1 b} for a != b and P_{a,a} = 0."""
    hd = request.getfixturevalue(fixture)
    group = hd.datum.group
    for a in group.elements():
        for b in group.elements():
            space = skew_primitive_space(hd.structure, hd.group_element(a), hd.group_element(b))
            expected = hd.datum.n_of(group.multiply(group.inverse(a), b))
            if a != b:
                expected += 1
            assert len(space) == expected, (a, b)


def test_coradical_level1_z2xz2(z2xz2):
    """Test dim A_1 = |G| (1 + sum n_g) = 12 on the Z_2 x Z_2 datum."""
    result = coradical_level1(z2xz2.structure, z2xz2.grouplikes())
    assert result.dimension == 12
    assert result.decomposition_dimension == 12
    assert result.report.all_passed


def test_sweedler_labels(sweedler):
    """Test the canonical label order and label strings."""
    assert [label_string(label) for label in sweedler.labels] == [
        "a[0]",
        "a[1]",
        "a[0]*x[1].1",
        "a[1]*x[1].1",
    ]
    assert sweedler.structure.basis_labels[3] == "a[1]*x[1].1"
    assert sweedler.symbols == (X,)


def test_h2_labels(h2):
    """Test labels sort by wedge length, then wedge, then group element."""
    assert [label_string(label) for label in h2.labels] == [
        "a[0]",
        "a[1]",
        "a[0]*x[1].1",
        "a[1]*x[1].1",
        "a[0]*x[1].2",
        "a[1]*x[1].2",
        "a[0]*x[1].1*x[1].2",
        "a[1]*x[1].1*x[1].2",
    ]


def test_built_algebras_are_hopf(sweedler, h2, z2xz2):
    """Test the built structures satisfy every Hopf axiom."""
    for hd in (sweedler, h2, z2xz2):
        assert verify_hopf_axioms(hd.structure).all_passed


def test_verify_relations(sweedler, h2, z2xz2):
    """Test the defining relations hold in the built structures."""
    for hd in (sweedler, h2, z2xz2):
        report = verify_relations(hd)
        assert report.all_passed
        assert set(report.checks) == {
            "square_zero",
            "grade_anticommutes",
            "skew_commutation",
            "group_commutation",
        }


def test_normalize_word_relations(sweedler_datum, h2_datum):
    """Test the three rewrite rules."""
    g, e = (1,), (0,)
    assert normalize_word(sweedler_datum, [X, g]) == {HDBasisLabel(g, (X,)): -1}
    assert normalize_word(sweedler_datum, [X, X]) == {}
    assert normalize_word(sweedler_datum, [g, g]) == {HDBasisLabel(e, ()): 1}
    assert normalize_word(sweedler_datum, []) == {HDBasisLabel(e, ()): 1}
    assert normalize_word(sweedler_datum, [g, X], 3) == {HDBasisLabel(g, (X,)): 3}
    assert normalize_word(sweedler_datum, [X], 0) == {}
    assert normalize_word(h2_datum, [X2, X1]) == {HDBasisLabel(e, (X1, X2)): -1}
    assert normalize_word(h2_datum, [X1, X2, X1]) == {}


def test_normalize_word_z2xz2(z2xz2_datum):
    """Test commutation scalars between generators of different grades."""
    y = GeneratorSymbol((0, 1), 1)
    x = GeneratorSymbol((1, 0), 1)
    e = (0, 0)
    # F((0,1), (1,0)) = 1 for the identity exponent matrix
    assert normalize_word(z2xz2_datum, [x, y]) == {HDBasisLabel(e, (y, x)): 1}
    assert normalize_word(z2xz2_datum, [x, (1, 0)]) == {HDBasisLabel((1, 0), (x,)): -1}
    assert normalize_word(z2xz2_datum, [x, (0, 1)]) == {HDBasisLabel((0, 1), (x,)): 1}


def test_normalize_word_random_redex_order(h2_datum, z2xz2_datum):
    """Test 10^4 random words normalize the same under random redex choice."""
    rng = random.Random(20240611)
    data = [
        (h2_datum, [X1, X2]),
        (z2xz2_datum, [GeneratorSymbol((0, 1), 1), GeneratorSymbol((1, 0), 1)]),
    ]
    for count in range(10_000):
        datum, symbols = data[count % 2]
        word = random_word(rng, datum, symbols, rng.randint(0, 7))
        leftmost = normalize_word(datum, word)
        shuffled = normalize_word(datum, word, rng=random.Random(count))
        assert leftmost == shuffled, word


def test_multiplication_matches_normalization(h2):
    """Test structure constants agree with normalizing concatenated words."""
    H = h2.structure
    for i, left in enumerate(h2.labels):
        for j, right in enumerate(h2.labels):
            word = [left.group_part, *left.wedge_part, right.group_part, *right.wedge_part]
            expected = h2.to_element(normalize_word(h2.datum, word))
            assert H.basis_product(i, j) == expected


def test_validate_datum_sweedler(sweedler_datum):
    """Test the derived facts reported for Sweedler's datum."""
    report = validate_datum(sweedler_datum)
    assert report.valid
    assert report.feasible
    assert report.dimension == 4
    assert report.group_order == 2
    assert report.i_f == [[1]]
    assert report.i_f_prime == [[1]]


def test_validate_datum_infeasible(z4xz4_datum):
    """Test a valid datum with n_g != n_{g^-1} is infeasible."""
    report = validate_datum(z4xz4_datum)
    assert report.valid
    assert not report.feasible
    assert [1, 0] in report.i_f
    assert [3, 0] in report.i_f
    assert len(report.i_f) == 8


def test_validate_datum_key_outside_group(datum_factory):
    """Test n keys must be group elements."""
    report = validate_datum(datum_factory([2], [[1]], {(2,): 1}))
    assert not report.valid
    assert report.report.checks["n_keys_in_group"].witness == [2]


def test_validate_datum_negative_multiplicity(datum_factory):
    """Test negative n_g is rejected."""
    report = validate_datum(datum_factory([2], [[1]], {(1,): -1}))
    assert not report.valid
    assert report.report.checks["n_nonnegative"].witness == [1]


def test_validate_datum_key_outside_i_f(datum_factory):
    """Test n_g > 0 requires F(g, g) = -1."""
    report = validate_datum(datum_factory([2, 2], [[1, 0], [0, 1]], {(1, 1): 1}))
    assert not report.valid
    assert report.report.checks["n_keys_in_i_f"].witness == [1, 1]


def test_validate_datum_degenerate_form(datum_factory):
    """Test a degenerate form invalidates the datum."""
    report = validate_datum(datum_factory([3], [[0]]))
    assert not report.valid
    assert not report.report.checks["form_valid"].passed
    assert report.report.checks["form_valid"].witness == ["non_degeneracy"]


def test_build_hd_rejects_invalid_datum(datum_factory):
    """Test build_hd raises with the violated invariant named."""
    with pytest.raises(DatumValidationError) as exc_info:
        build_hd(datum_factory([2, 2], [[1, 0], [0, 1]], {(1, 1): 1}))
    assert "n_keys_in_i_f" in str(exc_info.value)
    assert "[1, 1]" in str(exc_info.value)


def test_build_hd_bound(h2_datum):
    """Test build_hd refuses dimensions above max_dimension."""
    with pytest.raises(BoundExceededError):
        build_hd(h2_datum, EngineBoundsModel(max_dimension=4))


def test_projection_and_biproduct_sweedler(sweedler):
    """Test B = span{1, x} and the S^2 eigenspaces on B."""
    result = projection_and_biproduct(sweedler)
    assert result.report.all_passed
    assert result.b_basis == [sweedler.group_element((0,)), sweedler.symbol_element(X)]
    assert result.s2_plus_dimension == 1
    assert result.s2_minus_dimension == 1
    assert result.group_algebra.dimension == 2


@pytest.mark.parametrize("fixture", ["h0_datum", "h2_datum", "z2xz2_datum"])
def test_projection_and_biproduct(request, fixture):
    """Test the biproduct split on the other standard data."""
    datum = request.getfixturevalue(fixture)
    result = projection_and_biproduct(build_hd(datum))
    assert result.report.all_passed
    assert len(result.b_basis) == 2 ** datum.generator_count
    if datum.generator_count:
        assert result.s2_plus_dimension == result.s2_minus_dimension
    else:
        assert result.s2_minus_dimension == 0
