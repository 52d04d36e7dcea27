"""
Minimal triangular structures on H(D).

A structure choice T = (phi, (M_g)) determines a Hopf isomorphism
f_T: H(D)^{*cop} -> H(D) with f_T(alpha) = phi(alpha) on characters and
f_T(P_x) = M_g(x) on the functionals dual to x in V_g. The R-matrix is
R_T = sum_i b_i (x) f_T(b_i^*). The reverse direction reads a datum and a
structure choice back off a minimal triangular pair (A, R).
"""

import random
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .abgroup import (
    CharacterIsomorphism,
    FiniteAbelianGroup,
    GroupElement,
    SkewForm,
    enumerate_phi,
    phi_fixes,
    phi_is_skew,
    validate_form,
)
from .configuration import get_bounds
from .cyclo import CycloNumber, as_cyclo, discrete_log, root_of_unity
from .enums.severity_enum import Severity_Enum
from .exceptions import (
    BoundExceededError,
    HypothesisViolationError,
    InternalConsistencyError,
    InvalidStructureChoiceError,
    SamplingError,
)
from .forge_logging import log_debug, log_error, log_failed_checks, log_info, log_warning
from .hd_builder import (
    Datum,
    GeneratorSymbol,
    HDAlgebra,
    HDBasisLabel,
    build_hd,
    check_relations,
    validate_datum,
)
from .hopf_core import (
    Element,
    HopfStructure,
    LinearMap,
    TensorElement,
    antipode_power,
    antipode_square_trace,
    cop_flip,
    dual_hopf,
    embed_12,
    embed_13,
    embed_23,
    flip,
    is_grouplike,
    is_hopf_map,
    is_identity_map,
    skew_primitive_space,
    tensor_product,
)
from .linalg import EchelonBasis, add_scaled, determinant, kernel, rank, row_reduce
from .models.engine_bounds import EngineBoundsModel
from .models.verdict import VerdictReportModel

Matrix = Tuple[Tuple[CycloNumber, ...], ...]

DEFAULT_COEFFICIENT_POOL: Tuple[CycloNumber, ...] = (
    CycloNumber.one(),
    -CycloNumber.one(),
    root_of_unity(4, 1),
    root_of_unity(4, 3),
    CycloNumber.from_rational(2),
    CycloNumber.from_rational(-2),
    CycloNumber.from_rational(Fraction(1, 2)),
    CycloNumber.from_rational(Fraction(-1, 2)),
)

MAX_REDRAWS = 64


class StructureChoice:
    """T = (phi, (M_g)_{g in I_F'})."""

    def __init__(self, phi: CharacterIsomorphism, m_maps: Dict[GroupElement, Sequence[Sequence]]):
        self.phi = phi
        self.m_maps: Dict[GroupElement, Matrix] = {
            tuple(g): tuple(tuple(as_cyclo(v) for v in row) for row in matrix)
            for g, matrix in m_maps.items()
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StructureChoice)
            and self.phi == other.phi
            and self.m_maps == other.m_maps
        )

    def __repr__(self) -> str:
        maps = {g: [[str(v) for v in row] for row in m] for g, m in sorted(self.m_maps.items())}
        return f"StructureChoice({self.phi!r}, {maps})"


def _transpose(matrix: Matrix) -> Matrix:
    return tuple(zip(*matrix)) if matrix else ()


def _bounds(bounds: Optional[EngineBoundsModel]) -> EngineBoundsModel:
    return bounds if bounds is not None else get_bounds()


def validate_structure_choice(datum: Datum, choice: StructureChoice) -> VerdictReportModel:
    """Membership of phi in Phi and the conditions on the M_g."""
    group = datum.group
    phi = choice.phi
    report = VerdictReportModel()
    report.record("phi_on_datum_group", phi.group == group, list(phi.group.cyclic_factors))
    iso = phi.group == group and phi.is_well_defined() and phi.is_bijective()
    report.record("phi_isomorphism", iso, [list(image) for image in phi.images])
    if iso:
        witness = phi_is_skew(phi)
        report.record("phi_skew", witness is None, witness)
        witness = phi_fixes(phi, datum.form, datum.i_f_prime)
        report.record("phi_fixes_i_f_prime", witness is None, witness)

    expected = set(datum.i_f_prime)
    keys = set(choice.m_maps)
    report.record(
        "m_domain",
        keys == expected,
        {"missing": sorted(map(list, expected - keys)), "extra": sorted(map(list, keys - expected))},
    )
    bad_shape = next(
        (
            list(g)
            for g, matrix in sorted(choice.m_maps.items())
            if len(matrix) != datum.n_of(g)
            or any(len(row) != datum.n_of(group.inverse(g)) for row in matrix)
        ),
        None,
    )
    report.record("m_shapes", bad_shape is None, bad_shape)
    bad_transpose = next(
        (
            list(g)
            for g, matrix in sorted(choice.m_maps.items())
            if choice.m_maps.get(group.inverse(g)) != _transpose(matrix)
        ),
        None,
    )
    report.record("m_transpose", bad_transpose is None, bad_transpose)
    singular = None
    if bad_shape is None:
        singular = next(
            (
                list(g)
                for g, matrix in sorted(choice.m_maps.items())
                if len(matrix) != len(matrix[0] if matrix else ()) or determinant(matrix).is_zero()
            ),
            None,
        )
    report.record("m_invertible", bad_shape is None and singular is None, singular)
    return report


def _draw_matrix(rng: random.Random, size: int, pool: Sequence[CycloNumber], symmetric: bool) -> Matrix:
    rows = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if symmetric and j < i:
                rows[i][j] = rows[j][i]
            else:
                rows[i][j] = rng.choice(pool)
    return tuple(tuple(row) for row in rows)


def sample_sk(
    datum: Datum,
    seed: int,
    pool: Optional[Sequence[CycloNumber]] = None,
) -> Optional[Dict[GroupElement, Matrix]]:
    """
    Seeded draw of (M_g) from S(k); None when S(k) is empty because some
    n_g != n_{g^{-1}}.
    """
    group = datum.group
    pool = tuple(pool) if pool is not None else DEFAULT_COEFFICIENT_POOL
    support = datum.i_f_prime
    if any(datum.n_of(g) != datum.n_of(group.inverse(g)) for g in support):
        log_info(Severity_Enum.Info.value, "S(k) is empty: n is not inverse-symmetric")
        return None
    rng = random.Random(seed)
    maps: Dict[GroupElement, Matrix] = {}
    for g in support:
        if g in maps:
            continue
        inverse = group.inverse(g)
        size = datum.n_of(g)
        symmetric = inverse == g
        for attempt in range(MAX_REDRAWS):
            matrix = _draw_matrix(rng, size, pool, symmetric)
            if not determinant(matrix).is_zero():
                break
            log_debug(Severity_Enum.Debug.value, f"Redrawing singular M_{list(g)} ({attempt + 1})")
        else:
            raise SamplingError(
                f"No invertible M_{list(g)} after {MAX_REDRAWS} draws from a pool of {len(pool)}"
            )
        maps[g] = matrix
        maps[inverse] = _transpose(matrix)
    return maps


def structure_parameter_count(datum: Datum) -> Optional[int]:
    """Free scalar entries of a point of S(k), or None when S(k) is empty."""
    group = datum.group
    support = datum.i_f_prime
    if any(datum.n_of(g) != datum.n_of(group.inverse(g)) for g in support):
        return None
    total = 0
    for g in support:
        inverse = group.inverse(g)
        size = datum.n_of(g)
        if inverse == g:
            total += size * (size + 1) // 2
        elif g < inverse:
            total += size * size
    return total


def sample_structure_choices(
    datum: Datum,
    seeds: Sequence[int],
    pool: Optional[Sequence[CycloNumber]] = None,
    bounds: Optional[EngineBoundsModel] = None,
) -> List[StructureChoice]:
    """One T per seed, phi drawn from Phi and (M_g) from S(k); empty if infeasible."""
    if sample_sk(datum, seeds[0] if seeds else 0, pool) is None:
        return []
    phis = enumerate_phi(datum.group, datum.form, datum.i_f_prime, bounds)
    if not phis:
        return []
    choices = []
    for seed in seeds:
        phi = phis[random.Random(seed).randrange(len(phis))]
        choices.append(StructureChoice(phi, sample_sk(datum, seed, pool)))
    return choices


# ---------------------------------------------------------------------- f_T and R_T


def _character_functional(hd: HDAlgebra, character) -> Element:
    group = hd.datum.group
    return {
        hd.index[HDBasisLabel(a, ())]: group.pairing(character, a) for a in group.elements()
    }


def _symbol_functional(hd: HDAlgebra, symbol: GeneratorSymbol) -> Element:
    one = CycloNumber.one()
    return {hd.index[HDBasisLabel(a, (symbol,))]: one for a in hd.datum.group.elements()}


def _m_image(hd: HDAlgebra, choice: StructureChoice, symbol: GeneratorSymbol) -> Element:
    group = hd.datum.group
    target = group.inverse(symbol.grade)
    row = choice.m_maps[symbol.grade][symbol.index - 1]
    out: Element = {}
    for j, value in enumerate(row, start=1):
        add_scaled(out, hd.symbol_element(GeneratorSymbol(target, j)), value)
    return out


def build_f_T(
    hd: HDAlgebra, choice: StructureChoice, verify: bool = True
) -> LinearMap:
    """
    f_T: H^{*cop} -> H by the dual-basis algorithm: PBW monomials in the dual,
    their evaluation matrix, and their prescribed images.
    """
    report = validate_structure_choice(hd.datum, choice)
    if not report.all_passed:
        raise InvalidStructureChoiceError(
            f"Structure choice rejected: {sorted(report.failures())}"
        )
    H = hd.structure
    dual = dual_hopf(H)
    log_info(Severity_Enum.Info.value, f"Building f_T in dimension {H.dimension}")

    monomials = EchelonBasis()
    images: List[Element] = []
    for position, label in enumerate(hd.labels):
        character = label.group_part
        functional = _character_functional(hd, character)
        image = hd.group_element(choice.phi(character))
        for symbol in label.wedge_part:
            functional = dual.multiply(functional, _symbol_functional(hd, symbol))
            image = H.multiply(image, _m_image(hd, choice, symbol))
        if monomials.insert(functional, tag=position) is not None:
            log_error(Severity_Enum.Error.value, f"PBW monomial {position} is dependent")
            raise InternalConsistencyError("Evaluation matrix of PBW monomials is singular")
        images.append(image)

    f_images = []
    for i in range(H.dimension):
        combo = monomials.express({i: CycloNumber.one()})
        if combo is None:
            raise InternalConsistencyError(f"Dual basis vector {i} is not reached")
        value: Element = {}
        for k, c in combo.items():
            add_scaled(value, images[k], c)
        f_images.append(value)

    source = cop_flip(dual)
    f = LinearMap(f_images, H.dimension, source, H)
    if verify:
        hopf = is_hopf_map(source, H, f)
        if not hopf.all_passed:
            log_warning(
                Severity_Enum.Warn.value, f"f_T is not a Hopf map: {hopf.to_machine()}"
            )
            raise InvalidStructureChoiceError(
                f"f_T fails {', '.join(sorted(hopf.failures()))}"
            )
        if f.rank() != H.dimension:
            raise InvalidStructureChoiceError("f_T is not bijective")
    return f


def rmatrix_from_f(H: HopfStructure, f: LinearMap) -> TensorElement:
    """The unique R with (p (x) I)(R) = f(p): R = sum_i b_i (x) f(b_i^*)."""
    R: TensorElement = {}
    for i, image in enumerate(f.images):
        for j, c in image.items():
            R[(i, j)] = c
    mismatch = next((i for i in range(H.dimension) if _slice(R, i) != f.images[i]), None)
    if mismatch is not None:
        raise InternalConsistencyError(f"(b_{mismatch}^* (x) I)(R) differs from f")
    return R


def _slice(R: TensorElement, i: int) -> Element:
    return {j: c for (k, j), c in R.items() if k == i}


def rmatrix_to_f(H: HopfStructure, R: TensorElement) -> LinearMap:
    """f_R(p) = (p (x) I)(R) as a map from H^{*cop}."""
    images: List[Element] = [{} for _ in range(H.dimension)]
    for (i, j), c in R.items():
        images[i][j] = c
    return LinearMap(images, H.dimension, None, H)


def build_rmatrix(
    datum: Datum, choice: StructureChoice, bounds: Optional[EngineBoundsModel] = None
) -> Tuple[HDAlgebra, LinearMap, TensorElement]:
    hd = build_hd(datum, bounds)
    f = build_f_T(hd, choice)
    return hd, f, rmatrix_from_f(hd.structure, f)


# ---------------------------------------------------------------------- verdicts


def _first_failure(pairs):
    for witness, holds in pairs:
        if not holds:
            return witness
    return None


def verify_triangular(
    H: HopfStructure, R: TensorElement, bounds: Optional[EngineBoundsModel] = None
) -> VerdictReportModel:
    """Counit, both hexagons, the intertwiner identity and R R_21 = 1 (x) 1."""
    bounds = _bounds(bounds)
    if H.dimension > bounds.max_hexagon_dimension:
        raise BoundExceededError(
            f"dimension {H.dimension} exceeds max_hexagon_dimension "
            f"{bounds.max_hexagon_dimension}"
        )
    log_info(
        Severity_Enum.Info.value,
        f"Triangularity checks in dimension {H.dimension}, {len(R)} nonzero R coefficients",
    )
    unit = H.unit_element()
    report = VerdictReportModel()

    left: Element = {}
    right: Element = {}
    for (i, j), c in R.items():
        add_scaled(left, {j: H.counit[i]}, c)
        add_scaled(right, {i: H.counit[j]}, c)
    report.record(
        "counit", left == unit and right == unit,
        {"left_is_unit": left == unit, "right_is_unit": right == unit},
    )

    r13 = embed_13(R, unit)
    delta_left = {}
    delta_right = {}
    for (i, j), c in R.items():
        for (p, q), e in H.comult[i].items():
            add_scaled(delta_left, {(p, q, j): e}, c)
        for (p, q), e in H.comult[j].items():
            add_scaled(delta_right, {(i, p, q): e}, c)
    report.record(
        "hexagon_left", delta_left == H.triple_multiply(r13, embed_23(R, unit)), None
    )
    report.record(
        "hexagon_right", delta_right == H.triple_multiply(r13, embed_12(R, unit)), None
    )

    witness = _first_failure(
        (
            {"index": i, "label": H.basis_labels[i]},
            H.tensor_multiply(flip(H.comult[i]), R) == H.tensor_multiply(R, H.comult[i]),
        )
        for i in range(H.dimension)
    )
    report.record("intertwiner", witness is None, witness)
    report.record("unitarity", H.tensor_multiply(R, flip(R)) == H.tensor_unit(), None)

    log_failed_checks(report, "R-matrix check")
    return report


def minimality_rank(R: TensorElement, dimension: int) -> Tuple[int, bool]:
    """Rank of the coefficient matrix of R and whether it is dim H."""
    rows: Dict[int, Element] = {}
    for (i, j), c in R.items():
        rows.setdefault(i, {})[j] = c
    value = rank(rows.values())
    return value, value == dimension


class RMatrixAnalysis(NamedTuple):
    rmatrix: TensorElement
    u: Element
    rank: int
    minimal: bool
    antipode_square_is_identity: bool
    antipode_square_trace: CycloNumber
    verdicts: VerdictReportModel


def drinfeld_element(H: HopfStructure, R: TensorElement) -> Element:
    """u = sum S(y_i) x_i for R = sum x_i (x) y_i."""
    u: Element = {}
    for (i, j), c in R.items():
        add_scaled(u, H.multiply(H.antipode[j], {i: CycloNumber.one()}), c)
    return u


def drinfeld_analysis(H: HopfStructure, R: TensorElement) -> RMatrixAnalysis:
    """Drinfeld element identities, S^4 = I and the dimension divisibility."""
    u = drinfeld_element(H, R)
    value, minimal = minimality_rank(R, H.dimension)
    square = antipode_power(H, 2)
    square_is_identity = is_identity_map(square)
    report = VerdictReportModel()
    report.record("u_grouplike", is_grouplike(H, u), {str(k): str(v) for k, v in sorted(u.items())})
    report.record("u_squared_one", H.multiply(u, u) == H.unit_element(), None)
    report.record("u_antipode_invariant", H.apply_antipode(u) == u, None)
    witness = _first_failure(
        (i, H.multiply(square.images[i], u) == H.multiply(u, {i: CycloNumber.one()}))
        for i in range(H.dimension)
    )
    report.record("antipode_square_conjugation", witness is None, witness)
    report.record("antipode_fourth_power", is_identity_map(antipode_power(H, 4)), None)
    report.record(
        "dimension_divisible_by_four",
        square_is_identity or not minimal or H.dimension % 4 == 0,
        H.dimension,
    )
    report.record("minimal", minimal, {"rank": value, "dimension": H.dimension})
    return RMatrixAnalysis(
        R, u, value, minimal, square_is_identity, antipode_square_trace(H), report
    )


def push_forward_rmatrix(pi: LinearMap, R: TensorElement) -> TensorElement:
    """(pi (x) pi)(R)."""
    return pi.apply_tensor(R)


# ---------------------------------------------------------------------- recognition


class RecognitionResult(NamedTuple):
    datum: Datum
    choice: StructureChoice
    isomorphism: LinearMap
    algebra: HDAlgebra
    report: VerdictReportModel


def _grouplike_order(H: HopfStructure, g: Element, limit: int) -> Optional[int]:
    power = g
    for k in range(1, limit + 1):
        if power == H.unit_element():
            return k
        power = H.multiply(power, g)
    return None


def extract_datum(
    H: HopfStructure,
    R: TensorElement,
    grouplikes: Sequence[Element],
    skew_generators: Optional[Sequence[Tuple[Sequence[int], Element]]] = None,
    bounds: Optional[EngineBoundsModel] = None,
) -> RecognitionResult:
    """
    Recover (D, T) with (H, R) isomorphic to (H(D), R_T) from generators:
    grouplikes generating G(H) in cyclic-factor order and, optionally, graded
    skew primitive generators.
    """
    bounds = _bounds(bounds)
    triangular = verify_triangular(H, R, bounds)
    if not triangular.all_passed:
        raise HypothesisViolationError(
            "R is not triangular", witness=sorted(triangular.failures())
        )
    value, minimal = minimality_rank(R, H.dimension)
    if not minimal:
        raise HypothesisViolationError(
            "R is not minimal", witness={"rank": value, "dimension": H.dimension}
        )
    log_info(Severity_Enum.Info.value, f"Recognizing a datum in dimension {H.dimension}")

    orders = []
    for position, g in enumerate(grouplikes):
        if not is_grouplike(H, g):
            raise HypothesisViolationError("Generator is not grouplike", witness=position)
        order = _grouplike_order(H, g, bounds.max_group_order)
        if order is None or order < 2:
            raise HypothesisViolationError(
                "Grouplike generator has trivial or unbounded order", witness=position
            )
        orders.append(order)
    group = FiniteAbelianGroup(orders)
    if group.order > bounds.max_group_order:
        raise BoundExceededError(
            f"|G| = {group.order} exceeds max_group_order {bounds.max_group_order}"
        )
    grouplike_of: Dict[GroupElement, Element] = {}
    for g in group.elements():
        element = H.unit_element()
        for exponent, generator in zip(g, grouplikes):
            element = H.multiply(element, H.power(generator, exponent))
        grouplike_of[g] = element
    if rank(grouplike_of.values()) != group.order:
        raise HypothesisViolationError(
            "Grouplike generators are not independent", witness=list(group.cyclic_factors)
        )

    # F(g, h) = <f_R^{-1}(g), h>
    f_R = rmatrix_to_f(H, R)
    preimages = EchelonBasis()
    for i, image in enumerate(f_R.images):
        preimages.insert(image, tag=i)
    n_conductor = group.exponent
    exponent_matrix = []
    for g in group.generators():
        functional = preimages.express(grouplike_of[g])
        row = []
        for h in group.generators():
            pairing = CycloNumber.zero()
            for k, c in grouplike_of[h].items():
                pairing = pairing + functional.get(k, CycloNumber.zero()) * c
            exponent = discrete_log(pairing, n_conductor)
            if exponent is None:
                raise HypothesisViolationError(
                    "Form value is not a root of unity of the group exponent",
                    witness=[list(g), list(h), str(pairing)],
                )
            row.append(exponent)
        exponent_matrix.append(row)
    form = SkewForm(group, exponent_matrix, n_conductor)
    form_report = validate_form(form, bounds)
    if not form_report.all_passed:
        raise HypothesisViolationError(
            "Recovered form is not a non-degenerate skew form",
            witness=sorted(form_report.failures()),
        )

    unit = H.unit_element()
    graded: Dict[GroupElement, List[Element]] = {}
    if skew_generators is None:
        for g in group.elements():
            if g == group.identity:
                continue
            space = skew_primitive_space(H, unit, grouplike_of[g])
            inverse = grouplike_of[group.inverse(g)]
            images = []
            for p in space:
                image = H.multiply(H.multiply(grouplike_of[g], p), inverse)
                add_scaled(image, p)
                images.append(image)
            relations = kernel(images)
            v_g = row_reduce(
                [_combine(space, relation) for relation in relations]
            )
            if len(v_g) != len(space) - 1:
                raise HypothesisViolationError(
                    "P_{1,g} does not split as span{1 - g} plus the (-1)-eigenspace",
                    witness={"grade": list(g), "p_dimension": len(space), "v_dimension": len(v_g)},
                )
            if v_g:
                graded[g] = v_g
    else:
        for grade, x in skew_generators:
            g = group.normalize(grade)
            expected = dict(tensor_product(x, unit))
            add_scaled(expected, tensor_product(grouplike_of[g], x))
            if H.comultiply(x) != expected:
                raise HypothesisViolationError(
                    "Generator is not a (1, g)-skew primitive", witness=list(g)
                )
            graded.setdefault(g, []).append(x)
        for g, vectors in graded.items():
            if rank(vectors) != len(vectors):
                raise HypothesisViolationError(
                    "Skew primitive generators of one grade are dependent", witness=list(g)
                )

    generators = [(g, x) for g in sorted(graded) for x in graded[g]]
    relations = check_relations(H, form, grouplike_of, generators)
    if not relations.all_passed:
        raise HypothesisViolationError(
            "Generators violate the defining relations",
            witness=relations.to_machine(),
        )

    datum = Datum(group, form, {g: len(vectors) for g, vectors in graded.items()})
    datum_report = validate_datum(datum, bounds)
    if not datum_report.valid:
        raise HypothesisViolationError(
            "Recovered datum is invalid", witness=sorted(datum_report.report.failures())
        )
    if datum.dimension != H.dimension:
        raise HypothesisViolationError(
            "Generators do not generate the algebra",
            witness={"datum_dimension": datum.dimension, "dimension": H.dimension},
        )
    hd = build_hd(datum, bounds)
    psi_images = []
    for label in hd.labels:
        image = grouplike_of[label.group_part]
        for symbol in label.wedge_part:
            image = H.multiply(image, graded[symbol.grade][symbol.index - 1])
        psi_images.append(image)
    psi = LinearMap(psi_images, H.dimension, hd.structure, H)
    if psi.rank() != H.dimension:
        raise HypothesisViolationError("Generators do not generate the algebra", witness=psi.rank())
    hopf = is_hopf_map(hd.structure, H, psi)
    if not hopf.all_passed:
        raise HypothesisViolationError(
            "Generator correspondence is not a Hopf map", witness=sorted(hopf.failures())
        )

    psi_inverse = psi.inverse()
    transported = psi_inverse.apply_tensor(R)
    choice = _read_structure_choice(hd, transported)
    rebuilt = rmatrix_from_f(hd.structure, build_f_T(hd, choice))
    report = VerdictReportModel()
    report.merge(relations)
    report.record("hopf_isomorphism", True)
    report.record("transported_rmatrix", rebuilt == transported, None)
    if rebuilt != transported:
        log_error(Severity_Enum.Error.value, "R_T of the recovered structure differs from R")
        raise InternalConsistencyError("Recovered structure choice does not reproduce R")
    return RecognitionResult(datum, choice, psi, hd, report)


def _combine(vectors: Sequence[Element], coefficients: Element) -> Element:
    out: Element = {}
    for k, c in coefficients.items():
        add_scaled(out, vectors[k], c)
    return out


def _read_structure_choice(hd: HDAlgebra, R: TensorElement) -> StructureChoice:
    """phi and (M_g) read off f_R on characters and on the P_x."""
    group = hd.datum.group
    f = rmatrix_to_f(hd.structure, R)
    images = []
    for character in group.generators():
        image = f(_character_functional(hd, character))
        found = next(
            (
                a
                for a in group.elements()
                if image == hd.group_element(a)
            ),
            None,
        )
        if found is None:
            raise InternalConsistencyError(
                f"f_R of character {list(character)} is not a group element"
            )
        images.append(found)
    phi = CharacterIsomorphism(group, images)

    m_maps: Dict[GroupElement, List[List[CycloNumber]]] = {}
    for g in hd.datum.i_f_prime:
        target = hd.symbols_of_grade(group.inverse(g))
        rows = []
        for symbol in hd.symbols_of_grade(g):
            image = f(_symbol_functional(hd, symbol))
            row = [
                image.get(hd.index[HDBasisLabel(group.identity, (t,))], CycloNumber.zero())
                for t in target
            ]
            expected: Element = {}
            for t, c in zip(target, row):
                add_scaled(expected, hd.symbol_element(t), c)
            if image != expected:
                raise InternalConsistencyError(
                    f"f_R(P_x) for x = {symbol} is not in V_{list(group.inverse(g))}"
                )
            rows.append(row)
        m_maps[g] = rows
    return StructureChoice(phi, m_maps)
