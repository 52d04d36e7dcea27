from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..cyclo import CycloNumber
from ..models.cyclo_number import CycloNumberModel


def cyclo_to_model(value: CycloNumber) -> CycloNumberModel:
    return CycloNumberModel(
        conductor=value.conductor, coeffs=[str(c) for c in value.coeffs]
    )


def cyclo_from_model(model: CycloNumberModel) -> CycloNumber:
    return CycloNumber(model.conductor, [Fraction(c) for c in model.coeffs])


def sparse_to_model(vector: Dict[int, CycloNumber]) -> List[Tuple[int, CycloNumberModel]]:
    return [(i, cyclo_to_model(vector[i])) for i in sorted(vector)]


def sparse_from_model(entries: Sequence[Tuple[int, CycloNumberModel]]) -> Dict[int, CycloNumber]:
    vector: Dict[int, CycloNumber] = {}
    for i, model in entries:
        value = cyclo_from_model(model)
        total = vector.get(i, CycloNumber.zero()) + value
        if total.is_zero():
            vector.pop(i, None)
        else:
            vector[i] = total
    return vector
