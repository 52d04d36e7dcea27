"""
Finite abelian groups, characters and non-degenerate skew-symmetric forms.

Groups are products of cyclic groups on a fixed generator basis. Elements and
characters are both integer tuples on that basis; a character ``c`` pairs with
an element ``e`` as ``prod_i zeta_{d_i}^(c_i e_i)``.
"""

from functools import lru_cache
from itertools import product
from math import gcd, lcm, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .configuration import get_bounds
from .cyclo import CycloNumber, root_of_unity
from .enums.severity_enum import Severity_Enum
from .exceptions import BoundExceededError, InternalConsistencyError, PreconditionError
from .forge_logging import log_debug, log_info
from .models.engine_bounds import EngineBoundsModel
from .models.verdict import VerdictReportModel

GroupElement = Tuple[int, ...]
Character = Tuple[int, ...]


class FiniteAbelianGroup:
    """Direct product of cyclic groups Z_{d_1} x ... x Z_{d_r}."""

    def __init__(self, cyclic_factors: Sequence[int]):
        factors = tuple(int(d) for d in cyclic_factors)
        if any(d < 2 for d in factors):
            raise PreconditionError(f"Cyclic factors must be at least 2, got {factors}")
        self.cyclic_factors = factors

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteAbelianGroup) and other.cyclic_factors == self.cyclic_factors

    def __hash__(self) -> int:
        return hash(self.cyclic_factors)

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup({list(self.cyclic_factors)})"

    @property
    def rank(self) -> int:
        return len(self.cyclic_factors)

    @property
    def order(self) -> int:
        return prod(self.cyclic_factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_factors) if self.cyclic_factors else 1

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def generators(self) -> List[GroupElement]:
        return [
            tuple(1 if i == j else 0 for j in range(self.rank)) for i in range(self.rank)
        ]

    def elements(self) -> List[GroupElement]:
        """All elements in lexicographic order of exponent vectors."""
        return list(_elements(self.cyclic_factors))

    def normalize(self, element: Sequence[int]) -> GroupElement:
        if len(element) != self.rank:
            raise PreconditionError(
                f"Element {list(element)} does not match group rank {self.rank}"
            )
        return tuple(int(e) % d for e, d in zip(element, self.cyclic_factors))

    def contains(self, element: Sequence[int]) -> bool:
        return len(element) == self.rank and all(
            0 <= e < d for e, d in zip(element, self.cyclic_factors)
        )

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % d for a, b, d in zip(g, h, self.cyclic_factors))

    def inverse(self, g: GroupElement) -> GroupElement:
        return tuple((-a) % d for a, d in zip(g, self.cyclic_factors))

    def power(self, g: GroupElement, k: int) -> GroupElement:
        return tuple((a * k) % d for a, d in zip(g, self.cyclic_factors))

    def element_order(self, g: GroupElement) -> int:
        return lcm(*(d // gcd(a, d) for a, d in zip(g, self.cyclic_factors))) if g else 1

    def index(self, g: GroupElement) -> int:
        """Position of g in :meth:`elements`."""
        position = 0
        for a, d in zip(g, self.cyclic_factors):
            position = position * d + a
        return position

    def pairing(self, character: Character, g: GroupElement) -> CycloNumber:
        """<chi, g> as an exact root of unity of order dividing the exponent."""
        return root_of_unity(self.exponent, self.pairing_exponent(character, g))

    def pairing_exponent(self, character: Character, g: GroupElement) -> int:
        n = self.exponent
        return sum(c * e * (n // d) for c, e, d in zip(character, g, self.cyclic_factors)) % n


@lru_cache(maxsize=None)
def _elements(factors: Tuple[int, ...]) -> Tuple[GroupElement, ...]:
    return tuple(product(*(range(d) for d in factors)))


def character_table(group: FiniteAbelianGroup) -> List[List[CycloNumber]]:
    """Rows are characters and columns group elements, both in element order."""
    elements = group.elements()
    return [[group.pairing(chi, g) for g in elements] for chi in elements]


class SkewForm:
    """
    Bilinear form F on a group with values zeta_N^(E_ij) on generator pairs.
    """

    def __init__(
        self,
        group: FiniteAbelianGroup,
        exponent_matrix: Sequence[Sequence[int]],
        conductor: Optional[int] = None,
    ):
        self.group = group
        self.conductor = int(conductor) if conductor is not None else group.exponent
        if self.conductor < 1:
            raise PreconditionError(f"Form conductor must be positive, got {conductor}")
        matrix = tuple(tuple(int(v) % self.conductor for v in row) for row in exponent_matrix)
        if len(matrix) != group.rank or any(len(row) != group.rank for row in matrix):
            raise PreconditionError(
                f"Exponent matrix must be {group.rank}x{group.rank} for {group!r}"
            )
        self.exponent_matrix = matrix
        self._values: Dict[Tuple[GroupElement, GroupElement], CycloNumber] = {}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewForm)
            and other.group == self.group
            and other.conductor == self.conductor
            and other.exponent_matrix == self.exponent_matrix
        )

    def __hash__(self) -> int:
        return hash((self.group, self.conductor, self.exponent_matrix))

    def __repr__(self) -> str:
        return (
            f"SkewForm({list(self.group.cyclic_factors)}, N={self.conductor}, "
            f"E={[list(row) for row in self.exponent_matrix]})"
        )

    def exponent(self, g: GroupElement, h: GroupElement) -> int:
        """k with F(g, h) = zeta_N^k."""
        return (
            sum(
                self.exponent_matrix[i][j] * g[i] * h[j]
                for i in range(self.group.rank)
                for j in range(self.group.rank)
            )
            % self.conductor
        )

    def evaluate(self, g: GroupElement, h: GroupElement) -> CycloNumber:
        key = (g, h)
        value = self._values.get(key)
        if value is None:
            value = root_of_unity(self.conductor, self.exponent(g, h))
            self._values[key] = value
        return value

    def to_character(self, g: GroupElement) -> Optional[Character]:
        """f(g) with <f(g), h> = F(g, h), or None when F(g, -) is not a character."""
        n = self.conductor
        exponents = []
        for j, d in enumerate(self.group.cyclic_factors):
            column = sum(g[i] * self.exponent_matrix[i][j] for i in range(self.group.rank))
            if (column * d) % n:
                return None
            exponents.append((column * d // n) % d)
        return tuple(exponents)


def form_eval(form: SkewForm, g: GroupElement, h: GroupElement) -> CycloNumber:
    """F(g, h)."""
    return form.evaluate(g, h)


def _bounds(bounds: Optional[EngineBoundsModel]) -> EngineBoundsModel:
    return bounds if bounds is not None else get_bounds()


def _kernel_witness(form: SkewForm) -> Optional[GroupElement]:
    for g in form.group.elements():
        if g == form.group.identity:
            continue
        character = form.to_character(g)
        if character is not None and not any(character):
            return g
    return None


def _is_nondegenerate_snf(form: SkewForm) -> bool:
    """
    f is an isomorphism iff the integer relation matrix [C; diag(d)] has all
    invariant factors equal to one, C being the character exponent matrix.
    """
    group = form.group
    n = form.conductor
    rows = []
    for i, d_i in enumerate(group.cyclic_factors):
        rows.append(
            [form.exponent_matrix[i][j] * d_j // n for j, d_j in enumerate(group.cyclic_factors)]
        )
    for j, d_j in enumerate(group.cyclic_factors):
        rows.append([d_j if k == j else 0 for k in range(group.rank)])
    if not rows:
        return True
    normal = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(normal[k, k])) for k in range(min(normal.shape))]
    return all(value == 1 for value in diagonal)


def validate_form(
    form: SkewForm, bounds: Optional[EngineBoundsModel] = None
) -> VerdictReportModel:
    """
    Check bilinearity, skew symmetry, diagonal squares and non-degeneracy.
    Failures are reported with a witness, never raised.
    """
    group = form.group
    n = form.conductor
    factors = group.cyclic_factors
    report = VerdictReportModel()

    bad_pair = next(
        (
            [i, j]
            for i in range(group.rank)
            for j in range(group.rank)
            if (factors[i] * form.exponent_matrix[i][j]) % n
            or (factors[j] * form.exponent_matrix[i][j]) % n
        ),
        None,
    )
    report.record("bilinearity", bad_pair is None, bad_pair)

    bad_pair = next(
        (
            [i, j]
            for i in range(group.rank)
            for j in range(group.rank)
            if (form.exponent_matrix[i][j] + form.exponent_matrix[j][i]) % n
        ),
        None,
    )
    report.record("skew_symmetry", bad_pair is None, bad_pair)

    brute_force = group.order <= _bounds(bounds).max_group_order
    candidates = group.elements() if brute_force else group.generators()
    bad_square = next(
        (list(g) for g in candidates if (2 * form.exponent(g, g)) % n), None
    )
    report.record("diagonal_squares", bad_square is None, bad_square)

    if not report.checks["bilinearity"].passed:
        report.record("non_degeneracy", False, "form is not bilinear")
    elif brute_force:
        witness = _kernel_witness(form)
        report.record("non_degeneracy", witness is None, list(witness) if witness else None)
    else:
        log_debug(
            Severity_Enum.Debug.value,
            f"Deciding non-degeneracy of {form!r} through the Smith normal form",
        )
        report.record("non_degeneracy", _is_nondegenerate_snf(form), None)
    return report


def u_f_and_i_f(form: SkewForm) -> Tuple[Dict[GroupElement, int], List[GroupElement]]:
    """U_F(g) = F(g, g) as +1/-1 and I_F = U_F^{-1}(-1) in element order."""
    group = form.group
    n = form.conductor
    table: Dict[GroupElement, int] = {}
    for g in group.elements():
        k = form.exponent(g, g)
        if k == 0:
            table[g] = 1
        elif 2 * k == n:
            table[g] = -1
        else:
            raise InternalConsistencyError(f"F({list(g)}, {list(g)}) is not a sign")
    for g in group.elements():
        for h in group.elements():
            if table[group.multiply(g, h)] != table[g] * table[h]:
                raise InternalConsistencyError(
                    f"U_F is not multiplicative at {list(g)}, {list(h)}"
                )
    i_f = [g for g in group.elements() if table[g] == -1]
    return table, i_f


def _free_entry_ranges(group: FiniteAbelianGroup, n: int) -> List[Tuple[Tuple[int, int], List[int]]]:
    factors = group.cyclic_factors
    entries = []
    for i in range(group.rank):
        for j in range(i, group.rank):
            if i == j:
                values = [0]
                if factors[i] % 2 == 0 and n % 2 == 0:
                    values.append(n // 2)
            else:
                step = n // gcd(factors[i], factors[j])
                values = list(range(0, n, step))
            entries.append(((i, j), values))
    return entries


def enumerate_forms(
    group: FiniteAbelianGroup, bounds: Optional[EngineBoundsModel] = None
) -> List[SkewForm]:
    """All non-degenerate skew forms on the generator basis, lexicographically."""
    bounds = _bounds(bounds)
    if group.order > bounds.max_group_order:
        raise BoundExceededError(
            f"|G| = {group.order} exceeds max_group_order {bounds.max_group_order}"
        )
    n = group.exponent
    entries = _free_entry_ranges(group, n)
    log_info(
        Severity_Enum.Info.value,
        f"Enumerating skew forms on {group!r}: "
        f"{prod(len(values) for _, values in entries)} candidates",
    )
    forms = []
    for choice in product(*(values for _, values in entries)):
        matrix = [[0] * group.rank for _ in range(group.rank)]
        for ((i, j), _), value in zip(entries, choice):
            matrix[i][j] = value
            matrix[j][i] = (-value) % n
        form = SkewForm(group, matrix, n)
        if _kernel_witness(form) is None:
            forms.append(form)
    forms.sort(key=lambda f: f.exponent_matrix)
    log_info(Severity_Enum.Info.value, f"Found {len(forms)} non-degenerate forms")
    return forms


class CharacterIsomorphism:
    """
    A homomorphism G* -> G fixed by the images of the generator characters.
    """

    def __init__(self, group: FiniteAbelianGroup, images: Sequence[Sequence[int]]):
        self.group = group
        self.images = tuple(group.normalize(image) for image in images)
        if len(self.images) != group.rank:
            raise PreconditionError("One image per generator character is required")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharacterIsomorphism)
            and other.group == self.group
            and other.images == self.images
        )

    def __hash__(self) -> int:
        return hash((self.group, self.images))

    def __repr__(self) -> str:
        return f"CharacterIsomorphism({[list(image) for image in self.images]})"

    def __call__(self, character: Character) -> GroupElement:
        result = self.group.identity
        for c, image in zip(character, self.images):
            result = self.group.multiply(result, self.group.power(image, c))
        return result

    def is_well_defined(self) -> bool:
        return all(
            d % self.group.element_order(image) == 0
            for image, d in zip(self.images, self.group.cyclic_factors)
        )

    def is_bijective(self) -> bool:
        return len({self(chi) for chi in self.group.elements()}) == self.group.order

    def preimage(self, g: GroupElement) -> Optional[Character]:
        for chi in self.group.elements():
            if self(chi) == g:
                return chi
        return None


def _isomorphism_images(group: FiniteAbelianGroup) -> Iterator[Tuple[GroupElement, ...]]:
    """
    Backtracking over generator images of isomorphisms Z_{d_1} x ... -> G,
    keeping the generated subgroup as large as the domain prefix.
    """
    factors = group.cyclic_factors
    elements = group.elements()

    def extend(prefix: List[GroupElement], span: frozenset) -> Iterator[Tuple[GroupElement, ...]]:
        k = len(prefix)
        if k == group.rank:
            yield tuple(prefix)
            return
        d = factors[k]
        for candidate in elements:
            if d % group.element_order(candidate):
                continue
            powers = [group.power(candidate, t) for t in range(d)]
            grown = frozenset(group.multiply(s, p) for s in span for p in powers)
            if len(grown) != len(span) * d:
                continue
            yield from extend(prefix + [candidate], grown)

    yield from extend([], frozenset([group.identity]))


def automorphisms(group: FiniteAbelianGroup) -> List[Tuple[GroupElement, ...]]:
    """Automorphisms as generator images, in lexicographic order."""
    return list(_isomorphism_images(group))


def _apply_automorphism(
    group: FiniteAbelianGroup, images: Tuple[GroupElement, ...], g: GroupElement
) -> GroupElement:
    result = group.identity
    for e, image in zip(g, images):
        result = group.multiply(result, group.power(image, e))
    return result


def forms_up_to_automorphism(
    group: FiniteAbelianGroup, forms: Sequence[SkewForm]
) -> List[SkewForm]:
    """First form of every Aut(G)-orbit, preserving the input order."""
    maps = automorphisms(group)
    generators = group.generators()
    seen = set()
    representatives = []
    for form in forms:
        if form.exponent_matrix in seen:
            continue
        representatives.append(form)
        for images in maps:
            moved = [_apply_automorphism(group, images, g) for g in generators]
            seen.add(
                tuple(
                    tuple(form.exponent(moved[i], moved[j]) for j in range(group.rank))
                    for i in range(group.rank)
                )
            )
    return representatives


def form_inverse_map(form: SkewForm) -> CharacterIsomorphism:
    """f^{-1}: G* -> G for a non-degenerate form."""
    group = form.group
    images = []
    for chi in group.generators():
        image = next((g for g in group.elements() if form.to_character(g) == chi), None)
        if image is None:
            raise PreconditionError(f"{form!r} is degenerate: no preimage of {list(chi)}")
        images.append(image)
    return CharacterIsomorphism(group, images)


def phi_is_skew(phi: CharacterIsomorphism) -> Optional[List[List[int]]]:
    """
    Check <a, phi(b)> <b, phi(a)> = 1 on generator characters; the expression
    is bilinear, so this decides it on all of G* x G*. Returns a witness pair.
    """
    group = phi.group
    n = group.exponent
    generators = group.generators()
    for a in generators:
        for b in generators:
            total = group.pairing_exponent(a, phi(b)) + group.pairing_exponent(b, phi(a))
            if total % n:
                return [list(a), list(b)]
    return None


def phi_fixes(
    phi: CharacterIsomorphism, form: SkewForm, elements: Sequence[GroupElement]
) -> Optional[List[int]]:
    """First g with phi(f(g)) != g, or None."""
    for g in elements:
        character = form.to_character(g)
        if character is None or phi(character) != g:
            return list(g)
    return None


def enumerate_phi(
    group: FiniteAbelianGroup,
    form: SkewForm,
    i_f_prime: Sequence[GroupElement],
    bounds: Optional[EngineBoundsModel] = None,
) -> List[CharacterIsomorphism]:
    """
    The set of isomorphisms phi: G* -> G with <a, phi(b)><b, phi(a)> = 1 and
    phi(f(g)) = g for g in I_F'.
    """
    bounds = _bounds(bounds)
    if group.order > bounds.max_group_order:
        raise BoundExceededError(
            f"|G| = {group.order} exceeds max_group_order {bounds.max_group_order}"
        )
    _, i_f = u_f_and_i_f(form)
    outside = [list(g) for g in i_f_prime if g not in i_f]
    if outside:
        raise PreconditionError(f"I_F' must lie in I_F; offending elements {outside}")
    selected = []
    total = 0
    for images in _isomorphism_images(group):
        total += 1
        phi = CharacterIsomorphism(group, images)
        if phi_is_skew(phi) is None and phi_fixes(phi, form, i_f_prime) is None:
            selected.append(phi)
    log_info(
        Severity_Enum.Info.value,
        f"Phi: {len(selected)} of {total} isomorphisms G* -> G satisfy both conditions",
    )
    return selected
