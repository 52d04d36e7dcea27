from typing import List, Tuple

from pydantic import BaseModel, Field, model_validator

from .cyclo_number import CycloNumberModel


class RMatrixFileModel(BaseModel):
    """
    R = sum c b_i (x) b_j as sparse [i, j, c] triples.
    """

    dimension: int = Field(ge=1)
    entries: List[Tuple[int, int, CycloNumberModel]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_indices(self) -> "RMatrixFileModel":
        for i, j, _ in self.entries:
            if not (0 <= i < self.dimension and 0 <= j < self.dimension):
                raise ValueError(f"entry ({i}, {j}) out of range")
        return self
