"""
Finite-dimensional Hopf algebras as exact structure-constant tables.

Elements are sparse vectors ``{basis index: CycloNumber}``, tensors of two
factors are keyed by index pairs and tensors of three factors by triples.
"""

from itertools import product
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .abgroup import FiniteAbelianGroup
from .cyclo import CycloNumber, Scalar, as_cyclo
from .enums.severity_enum import Severity_Enum
from .exceptions import DimensionMismatchError, PreconditionError
from .forge_logging import log_debug, log_failed_checks, log_info
from .linalg import (
    EchelonBasis,
    Vector,
    add_scaled,
    basis_vector,
    clean,
    inverse_images,
    kernel,
    rank,
    scaled,
)
from .models.verdict import VerdictReportModel

Element = Dict[int, CycloNumber]
TensorElement = Dict[Tuple[int, int], CycloNumber]
TripleTensor = Dict[Tuple[int, int, int], CycloNumber]


class HopfStructure:
    """
    Structure constants over a labeled basis.

    ``mult[(i, j)]`` is b_i b_j, ``comult[i]`` is Delta(b_i), ``counit[i]`` is
    eps(b_i) and ``antipode[i]`` is S(b_i). Missing ``mult`` pairs are zero.
    """

    def __init__(
        self,
        basis_labels: Sequence[str],
        mult: Dict[Tuple[int, int], Element],
        unit: Element,
        comult: Sequence[TensorElement],
        counit: Sequence[Scalar],
        antipode: Sequence[Element],
    ):
        self.dimension = len(basis_labels)
        self.basis_labels = tuple(basis_labels)
        self.mult = {key: dict(value) for key, value in mult.items() if value}
        self.unit = dict(unit)
        self.comult = tuple(dict(value) for value in comult)
        self.counit = tuple(as_cyclo(value) for value in counit)
        self.antipode = tuple(dict(value) for value in antipode)
        if not (len(self.comult) == len(self.counit) == len(self.antipode) == self.dimension):
            raise DimensionMismatchError(
                f"Structure tables disagree with dimension {self.dimension}"
            )

    def __repr__(self) -> str:
        return f"HopfStructure(dimension={self.dimension})"

    # ------------------------------------------------------------------ algebra

    def _check(self, x: Element):
        if any(not 0 <= i < self.dimension for i in x):
            raise DimensionMismatchError(
                f"Element index out of range for dimension {self.dimension}"
            )

    def basis_product(self, i: int, j: int) -> Element:
        return self.mult.get((i, j), {})

    def multiply(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        out: Element = {}
        for i, a in x.items():
            for j, b in y.items():
                add_scaled(out, self.basis_product(i, j), a * b)
        return out

    def unit_element(self) -> Element:
        return dict(self.unit)

    def element(self, index: int) -> Element:
        return basis_vector(index)

    def comultiply(self, x: Element) -> TensorElement:
        self._check(x)
        out: TensorElement = {}
        for i, a in x.items():
            add_scaled(out, self.comult[i], a)
        return out

    def apply_counit(self, x: Element) -> CycloNumber:
        self._check(x)
        total = CycloNumber.zero()
        for i, a in x.items():
            total = total + a * self.counit[i]
        return total

    def apply_antipode(self, x: Element) -> Element:
        self._check(x)
        out: Element = {}
        for i, a in x.items():
            add_scaled(out, self.antipode[i], a)
        return out

    def power(self, x: Element, k: int) -> Element:
        result = self.unit_element()
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    # ------------------------------------------------------------------ tensors

    def tensor_multiply(self, x: TensorElement, y: TensorElement) -> TensorElement:
        out: TensorElement = {}
        for (i, j), a in x.items():
            for (k, l), b in y.items():
                left = self.basis_product(i, k)
                if not left:
                    continue
                right = self.basis_product(j, l)
                if not right:
                    continue
                c = a * b
                for p, u in left.items():
                    for q, v in right.items():
                        add_scaled(out, {(p, q): u * v}, c)
        return out

    def triple_multiply(self, x: TripleTensor, y: TripleTensor) -> TripleTensor:
        out: TripleTensor = {}
        for (i, j, k), a in x.items():
            for (p, q, r), b in y.items():
                first = self.basis_product(i, p)
                if not first:
                    continue
                second = self.basis_product(j, q)
                if not second:
                    continue
                third = self.basis_product(k, r)
                if not third:
                    continue
                c = a * b
                for s, u in first.items():
                    for t, v in second.items():
                        uv = u * v
                        for w, z in third.items():
                            add_scaled(out, {(s, t, w): uv * z}, c)
        return out

    def tensor_unit(self) -> TensorElement:
        return tensor_product(self.unit, self.unit)

    def comultiply_cop(self, x: Element) -> TensorElement:
        return flip(self.comultiply(x))


def tensor_product(x: Element, y: Element) -> TensorElement:
    return {(i, j): a * b for i, a in x.items() for j, b in y.items()}


def flip(tensor: TensorElement) -> TensorElement:
    """R -> R_21."""
    return {(j, i): c for (i, j), c in tensor.items()}


def embed_12(tensor: TensorElement, unit: Element) -> TripleTensor:
    return {(i, j, u): c * e for (i, j), c in tensor.items() for u, e in unit.items()}


def embed_13(tensor: TensorElement, unit: Element) -> TripleTensor:
    return {(i, u, j): c * e for (i, j), c in tensor.items() for u, e in unit.items()}


def embed_23(tensor: TensorElement, unit: Element) -> TripleTensor:
    return {(u, i, j): c * e for (i, j), c in tensor.items() for u, e in unit.items()}


# ---------------------------------------------------------------------- verification


def _first(pairs) -> Optional[list]:
    for witness, holds in pairs:
        if not holds:
            return list(witness)
    return None


def verify_hopf_axioms(H: HopfStructure) -> VerdictReportModel:
    """
    Check every Hopf axiom exhaustively on basis elements; witnesses are the
    first failing basis indices.
    """
    d = H.dimension
    indices = range(d)
    unit = H.unit_element()
    report = VerdictReportModel()
    log_info(Severity_Enum.Info.value, f"Verifying Hopf axioms in dimension {d}")

    report.record(
        "associativity",
        *_verdict(
            ((i, j, k), H.multiply(H.basis_product(i, j), {k: CycloNumber.one()})
             == H.multiply({i: CycloNumber.one()}, H.basis_product(j, k)))
            for i, j, k in product(indices, repeat=3)
        ),
    )
    report.record(
        "unitality",
        *_verdict(
            ((i,), H.multiply(unit, basis_vector(i)) == basis_vector(i)
             and H.multiply(basis_vector(i), unit) == basis_vector(i))
            for i in indices
        ),
    )

    def left_coassoc(i):
        out = {}
        for (j, k), c in H.comult[i].items():
            for (p, q), e in H.comult[j].items():
                add_scaled(out, {(p, q, k): e}, c)
        return out

    def right_coassoc(i):
        out = {}
        for (j, k), c in H.comult[i].items():
            for (p, q), e in H.comult[k].items():
                add_scaled(out, {(j, p, q): e}, c)
        return out

    report.record(
        "coassociativity",
        *_verdict(((i,), left_coassoc(i) == right_coassoc(i)) for i in indices),
    )

    def counit_sides(i):
        left, right = {}, {}
        for (j, k), c in H.comult[i].items():
            add_scaled(left, {k: H.counit[j]}, c)
            add_scaled(right, {j: H.counit[k]}, c)
        return left == basis_vector(i) and right == basis_vector(i)

    report.record("counitality", *_verdict(((i,), counit_sides(i)) for i in indices))
    report.record(
        "comultiplication_homomorphism",
        *_verdict(
            ((i, j), H.comultiply(H.basis_product(i, j))
             == H.tensor_multiply(H.comult[i], H.comult[j]))
            for i, j in product(indices, repeat=2)
        ),
    )
    report.record(
        "counit_homomorphism",
        *_verdict(
            ((i, j), H.apply_counit(H.basis_product(i, j)) == H.counit[i] * H.counit[j])
            for i, j in product(indices, repeat=2)
        ),
    )
    report.record(
        "unit_coalgebra",
        *_verdict(
            [((), H.comultiply(unit) == H.tensor_unit() and H.apply_counit(unit) == 1)]
        ),
    )

    def antipode_sides(i):
        left, right = {}, {}
        for (j, k), c in H.comult[i].items():
            add_scaled(left, H.multiply(H.antipode[j], basis_vector(k)), c)
            add_scaled(right, H.multiply(basis_vector(j), H.antipode[k]), c)
        expected = scaled(unit, H.counit[i])
        return left == expected and right == expected

    report.record("antipode", *_verdict(((i,), antipode_sides(i)) for i in indices))

    log_failed_checks(report, "Hopf axiom")
    return report


def _verdict(pairs) -> Tuple[bool, Optional[list]]:
    witness = _first(pairs)
    return witness is None, witness


# ---------------------------------------------------------------------- duals


def dual_hopf(H: HopfStructure) -> HopfStructure:
    """H* on the dual basis: every structure tensor transposed."""
    d = H.dimension
    mult: Dict[Tuple[int, int], Element] = {}
    for k in range(d):
        for (i, j), c in H.comult[k].items():
            mult.setdefault((i, j), {})[k] = c
    unit = clean({i: H.counit[i] for i in range(d)})
    comult: List[TensorElement] = [{} for _ in range(d)]
    for (i, j), product_ in H.mult.items():
        for k, c in product_.items():
            comult[k][(i, j)] = c
    counit = [H.unit.get(i, CycloNumber.zero()) for i in range(d)]
    antipode: List[Element] = [{} for _ in range(d)]
    for j in range(d):
        for i, c in H.antipode[j].items():
            antipode[i][j] = c
    labels = [f"{label}*" for label in H.basis_labels]
    return HopfStructure(labels, mult, unit, comult, counit, antipode)


def cop_flip(H: HopfStructure) -> HopfStructure:
    """Same algebra, opposite comultiplication, antipode S^{-1}."""
    inverse = inverse_images(list(H.antipode), H.dimension)
    return HopfStructure(
        H.basis_labels,
        H.mult,
        H.unit,
        [flip(value) for value in H.comult],
        H.counit,
        inverse,
    )


# ---------------------------------------------------------------------- grouplikes and skew primitives


def is_grouplike(H: HopfStructure, x: Element) -> bool:
    """Delta(x) = x (x) x and eps(x) = 1."""
    return H.comultiply(x) == tensor_product(x, x) and H.apply_counit(x) == 1


def skew_primitive_space(H: HopfStructure, g: Element, h: Element) -> List[Element]:
    """Echelon basis of P_{g,h} = {x : Delta(x) = x (x) g + h (x) x}."""
    for name, value in (("g", g), ("h", h)):
        if not is_grouplike(H, value):
            raise PreconditionError(f"{name} is not grouplike")
    images = []
    for i in range(H.dimension):
        b = basis_vector(i)
        image = dict(H.comult[i])
        add_scaled(image, tensor_product(b, g), -1)
        add_scaled(image, tensor_product(h, b), -1)
        images.append(image)
    return kernel(images)


class CoradicalLevelOne(NamedTuple):
    basis: List[Element]
    dimension: int
    decomposition_dimension: int
    pair_dimensions: Dict[Tuple[int, int], int]
    report: VerdictReportModel


def coradical_level1(H: HopfStructure, grouplikes: Sequence[Element]) -> CoradicalLevelOne:
    """
    A_1 = Delta^{-1}(A (x) A_0 + A_0 (x) A) with A_0 spanned by the grouplikes,
    compared with |G| + sum_{g != h} (dim P_{g,h} - 1) + sum_g dim P_{g,g}.
    """
    for position, g in enumerate(grouplikes):
        if not is_grouplike(H, g):
            raise PreconditionError(f"Grouplike candidate {position} is not grouplike")
    if rank(grouplikes) != len(grouplikes):
        raise PreconditionError("Grouplike candidates are linearly dependent")
    log_info(
        Severity_Enum.Info.value,
        f"Computing A_1 in dimension {H.dimension} over {len(grouplikes)} grouplikes",
    )

    coradical = EchelonBasis()
    for g in grouplikes:
        coradical.add(g)
    quotient = [coradical.reduce(basis_vector(i))[0] for i in range(H.dimension)]
    images = []
    for i in range(H.dimension):
        image: TensorElement = {}
        for (j, k), c in H.comult[i].items():
            if quotient[j] and quotient[k]:
                add_scaled(image, tensor_product(quotient[j], quotient[k]), c)
        images.append(image)
    level_one = [clean(vector) for vector in kernel(images)]

    pair_dimensions = {}
    total = len(grouplikes)
    for a, g in enumerate(grouplikes):
        for b, h in enumerate(grouplikes):
            dim = len(skew_primitive_space(H, g, h))
            pair_dimensions[(a, b)] = dim
            total += dim - 1 if a != b else dim
    report = VerdictReportModel()
    report.record(
        "decomposition",
        total == len(level_one),
        {"level_one": len(level_one), "decomposition": total},
    )
    containment = EchelonBasis()
    for vector in level_one:
        containment.add(vector)
    missing = next(
        (i for i, g in enumerate(grouplikes) if not containment.contains(g)), None
    )
    report.record("contains_coradical", missing is None, missing)
    return CoradicalLevelOne(level_one, len(level_one), total, pair_dimensions, report)


# ---------------------------------------------------------------------- linear maps


class LinearMap:
    """
    A linear map given by the images of the domain basis vectors.
    """

    def __init__(
        self,
        images: Sequence[Vector],
        codomain_dimension: int,
        domain: Optional[HopfStructure] = None,
        codomain: Optional[HopfStructure] = None,
    ):
        self.images = tuple(dict(image) for image in images)
        self.domain_dimension = len(self.images)
        self.codomain_dimension = codomain_dimension
        self.domain = domain
        self.codomain = codomain

    def __call__(self, x: Vector) -> Vector:
        out: Vector = {}
        for i, a in x.items():
            if not 0 <= i < self.domain_dimension:
                raise DimensionMismatchError(f"Index {i} outside the domain")
            add_scaled(out, self.images[i], a)
        return out

    def apply_tensor(self, tensor: TensorElement) -> TensorElement:
        out: TensorElement = {}
        for (i, j), c in tensor.items():
            add_scaled(out, tensor_product(self.images[i], self.images[j]), c)
        return out

    def compose(self, first: "LinearMap") -> "LinearMap":
        """self after first."""
        if first.codomain_dimension != self.domain_dimension:
            raise DimensionMismatchError("Maps cannot be composed")
        return LinearMap(
            [self(image) for image in first.images],
            self.codomain_dimension,
            first.domain,
            self.codomain,
        )

    def rank(self) -> int:
        return rank(self.images)

    def inverse(self) -> "LinearMap":
        if self.domain_dimension != self.codomain_dimension:
            raise DimensionMismatchError("Only square maps can be inverted")
        return LinearMap(
            inverse_images(list(self.images), self.codomain_dimension),
            self.domain_dimension,
            self.codomain,
            self.domain,
        )

    def matrix(self) -> List[List[CycloNumber]]:
        """Dense matrix with column i the image of basis vector i."""
        zero = CycloNumber.zero()
        return [
            [self.images[i].get(r, zero) for i in range(self.domain_dimension)]
            for r in range(self.codomain_dimension)
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearMap)
            and self.codomain_dimension == other.codomain_dimension
            and self.images == other.images
        )


def is_hopf_map(
    source: HopfStructure, target: HopfStructure, f: LinearMap
) -> VerdictReportModel:
    """Algebra, unit, coalgebra, counit and antipode compatibility of f."""
    if f.domain_dimension != source.dimension or f.codomain_dimension != target.dimension:
        raise DimensionMismatchError("Map shape does not match the two structures")
    indices = range(source.dimension)
    report = VerdictReportModel()
    report.record(
        "multiplicative",
        *_verdict(
            ((i, j), f(source.basis_product(i, j)) == target.multiply(f.images[i], f.images[j]))
            for i, j in product(indices, repeat=2)
        ),
    )
    report.record(
        "unital", *_verdict([((), f(source.unit_element()) == target.unit_element())])
    )
    report.record(
        "comultiplicative",
        *_verdict(
            ((i,), target.comultiply(f.images[i]) == f.apply_tensor(source.comult[i]))
            for i in indices
        ),
    )
    report.record(
        "counital",
        *_verdict(
            ((i,), target.apply_counit(f.images[i]) == source.counit[i]) for i in indices
        ),
    )
    report.record(
        "antipode_compatible",
        *_verdict(
            ((i,), f(source.antipode[i]) == target.apply_antipode(f.images[i]))
            for i in indices
        ),
    )
    log_debug(
        Severity_Enum.Debug.value,
        f"Hopf map check: {'pass' if report.all_passed else sorted(report.failures())}",
    )
    return report


# ---------------------------------------------------------------------- examples and antipode data


def group_algebra(group: FiniteAbelianGroup) -> HopfStructure:
    """k[G] on the element basis."""
    elements = group.elements()
    one = CycloNumber.one()
    mult = {
        (group.index(g), group.index(h)): {group.index(group.multiply(g, h)): one}
        for g in elements
        for h in elements
    }
    labels = ["a" + str(list(g)).replace(" ", "") for g in elements]
    return HopfStructure(
        labels,
        mult,
        {group.index(group.identity): one},
        [{(i, i): one} for i in range(len(elements))],
        [one] * len(elements),
        [{group.index(group.inverse(g)): one} for g in elements],
    )


def antipode_map(H: HopfStructure) -> LinearMap:
    return LinearMap(H.antipode, H.dimension, H, H)


def antipode_power(H: HopfStructure, k: int) -> LinearMap:
    """S^k as a linear map (k >= 0)."""
    result = LinearMap([basis_vector(i) for i in range(H.dimension)], H.dimension, H, H)
    step = antipode_map(H)
    for _ in range(k):
        result = step.compose(result)
    return result


def antipode_square_trace(H: HopfStructure) -> CycloNumber:
    square = antipode_power(H, 2)
    total = CycloNumber.zero()
    for i, image in enumerate(square.images):
        total = total + image.get(i, CycloNumber.zero())
    return total


def is_identity_map(f: LinearMap) -> bool:
    return all(image == basis_vector(i) for i, image in enumerate(f.images))
