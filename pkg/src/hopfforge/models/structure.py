from typing import List, Tuple

from pydantic import BaseModel, Field, model_validator

from .cyclo_number import CycloNumberModel

SparseEntry = Tuple[int, CycloNumberModel]


class StructureFileModel(BaseModel):
    """
    Structure constants of a finite-dimensional Hopf algebra.

    ``mult`` rows [i, j, k, c] mean b_i b_j has coefficient c on b_k;
    ``comult`` rows [i, j, k, c] mean Delta(b_i) has coefficient c on b_j (x) b_k;
    row i of ``antipode`` is S(b_i) in the basis.
    """

    dimension: int = Field(ge=1)
    basis_labels: List[str]
    unit: List[SparseEntry]
    mult: List[Tuple[int, int, int, CycloNumberModel]]
    comult: List[Tuple[int, int, int, CycloNumberModel]]
    counit: List[CycloNumberModel]
    antipode: List[List[CycloNumberModel]]

    @model_validator(mode="after")
    def check_dimensions(self) -> "StructureFileModel":
        d = self.dimension
        if len(self.basis_labels) != d:
            raise ValueError("basis_labels must list one label per basis element")
        if len(self.counit) != d:
            raise ValueError("counit must have one entry per basis element")
        if len(self.antipode) != d or any(len(row) != d for row in self.antipode):
            raise ValueError("antipode must be a dense dimension x dimension matrix")
        indices = [entry[0] for entry in self.unit]
        for row in self.mult + self.comult:
            indices.extend(row[:3])
        if any(not 0 <= i < d for i in indices):
            raise ValueError("basis index out of range")
        return self
