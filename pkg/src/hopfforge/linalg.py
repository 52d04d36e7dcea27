"""
Sparse exact linear algebra over CycloNumber scalars.

Vectors are plain dicts from comparable keys (basis indices, index pairs or
triples) to nonzero CycloNumbers. Elimination is incremental: an
:class:`EchelonBasis` keeps normalized rows whose pivot is the smallest key
with a nonzero coefficient, and remembers how each row was combined from the
inputs so kernels and inverses fall out of the same pass.
"""

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .cyclo import CycloNumber, Scalar, as_cyclo
from .exceptions import DimensionMismatchError, PreconditionError

Vector = Dict[Hashable, CycloNumber]


def add_scaled(target: Vector, vector: Vector, scale: Scalar = 1) -> Vector:
    """In place: target += scale * vector, keeping only nonzero entries."""
    scale = as_cyclo(scale)
    if scale.is_zero():
        return target
    unit = scale == 1
    for key, value in vector.items():
        term = value if unit else value * scale
        if term.is_zero():
            continue
        current = target.get(key)
        if current is None:
            target[key] = term
        else:
            total = current + term
            if total.is_zero():
                del target[key]
            else:
                target[key] = total
    return target


def scaled(vector: Vector, scale: Scalar) -> Vector:
    scale = as_cyclo(scale)
    if scale.is_zero():
        return {}
    return {key: value * scale for key, value in vector.items() if not value.is_zero()}


def clean(vector: Dict[Hashable, Scalar]) -> Vector:
    """Coerce values to CycloNumber and drop zeros."""
    out: Vector = {}
    for key, value in vector.items():
        value = as_cyclo(value)
        if not value.is_zero():
            out[key] = value
    return out


def basis_vector(key: Hashable) -> Vector:
    return {key: CycloNumber.one()}


class EchelonBasis:
    """
    Incrementally built row echelon basis.

    Each stored row has coefficient one at its pivot and zero at the pivots of
    all earlier rows. ``combos`` record every row as a combination of the
    tagged input vectors.
    """

    def __init__(self):
        self._rows: List[Tuple[Hashable, Vector, Vector]] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[Hashable]:
        return [pivot for pivot, _, _ in self._rows]

    def reduce(self, vector: Vector, combo: Optional[Vector] = None) -> Tuple[Vector, Vector]:
        """
        Reduce against the stored rows.

        Returns the residual and the combination of tagged inputs that was
        added while reducing; ``residual = vector + combo . inputs``.
        """
        residual = dict(vector)
        combo = dict(combo or {})
        for pivot, row, row_combo in self._rows:
            c = residual.get(pivot)
            if c is None:
                continue
            add_scaled(residual, row, -c)
            add_scaled(combo, row_combo, -c)
        return residual, combo

    def insert(self, vector: Vector, tag: Optional[Hashable] = None) -> Optional[Vector]:
        """
        Add a vector. Returns None when it was independent, otherwise the
        linear relation among tagged inputs that it exposed (possibly empty
        when the vector carries no tag).
        """
        start = basis_vector(tag) if tag is not None else {}
        residual, combo = self.reduce(vector, start)
        if not residual:
            return combo
        pivot = min(residual)
        inverse = residual[pivot].inverse()
        self._rows.append((pivot, scaled(residual, inverse), scaled(combo, inverse)))
        return None

    def add(self, vector: Vector, tag: Optional[Hashable] = None) -> bool:
        """Add a vector; True when it enlarged the span."""
        return self.insert(vector, tag) is None

    def contains(self, vector: Vector) -> bool:
        residual, _ = self.reduce(vector)
        return not residual

    def express(self, vector: Vector) -> Optional[Vector]:
        """Coefficients over the tagged inputs reproducing vector, or None."""
        residual, combo = self.reduce(vector)
        if residual:
            return None
        return scaled(combo, -1)

    def rows(self) -> List[Vector]:
        """Reduced row echelon form, sorted by pivot."""
        ordered = sorted(self._rows, key=lambda item: item[0])
        reduced: List[Tuple[Hashable, Vector]] = []
        for pivot, row, _ in reversed(ordered):
            row = dict(row)
            for later_pivot, later_row in reduced:
                c = row.get(later_pivot)
                if c is not None:
                    add_scaled(row, later_row, -c)
            reduced.append((pivot, row))
        return [row for _, row in reversed(reduced)]


def row_reduce(vectors: Iterable[Vector]) -> List[Vector]:
    """Canonical basis (RREF rows) of the span of vectors."""
    basis = EchelonBasis()
    for vector in vectors:
        basis.add(vector)
    return basis.rows()


def rank(vectors: Iterable[Vector]) -> int:
    basis = EchelonBasis()
    for vector in vectors:
        basis.add(vector)
    return len(basis)


def kernel(images: Sequence[Vector]) -> List[Vector]:
    """
    Basis of {c : sum_i c_i images[i] = 0}, as vectors over the indices of
    images, in reduced row echelon form.
    """
    basis = EchelonBasis()
    relations = []
    for index, image in enumerate(images):
        relation = basis.insert(image, tag=index)
        if relation is not None:
            relations.append(relation)
    return row_reduce(relations)


def intersection_dimension(first: Sequence[Vector], second: Sequence[Vector]) -> int:
    return rank(first) + rank(second) - rank(list(first) + list(second))


def inverse_images(images: Sequence[Vector], dimension: int) -> List[Vector]:
    """
    Invert a square linear map given by the images of basis vectors.

    ``images[i]`` is the image of basis vector i; the result lists the
    preimages of the codomain basis vectors 0..dimension-1.
    """
    if len(images) != dimension:
        raise DimensionMismatchError(
            f"Square map expected: {len(images)} images for dimension {dimension}"
        )
    basis = EchelonBasis()
    for index, image in enumerate(images):
        if basis.insert(image, tag=index) is not None:
            raise PreconditionError(f"Map is singular: image {index} is dependent")
    preimages = []
    for key in range(dimension):
        combo = basis.express(basis_vector(key))
        if combo is None:
            raise PreconditionError(f"Map is not onto: basis vector {key} missed")
        preimages.append(combo)
    return preimages


def determinant(matrix: Sequence[Sequence[Scalar]]) -> CycloNumber:
    """Exact determinant of a dense square matrix by Gaussian elimination."""
    size = len(matrix)
    rows = [[as_cyclo(value) for value in row] for row in matrix]
    if any(len(row) != size for row in rows):
        raise DimensionMismatchError("Determinant needs a square matrix")
    result = CycloNumber.one()
    for column in range(size):
        pivot_row = next(
            (r for r in range(column, size) if not rows[r][column].is_zero()), None
        )
        if pivot_row is None:
            return CycloNumber.zero()
        if pivot_row != column:
            rows[column], rows[pivot_row] = rows[pivot_row], rows[column]
            result = -result
        pivot = rows[column][column]
        result = result * pivot
        inverse = pivot.inverse()
        for r in range(column + 1, size):
            factor = rows[r][column]
            if factor.is_zero():
                continue
            factor = factor * inverse
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[column])]
    return result
