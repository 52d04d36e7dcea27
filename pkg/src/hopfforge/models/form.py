from typing import List

from pydantic import BaseModel, Field, model_validator


class FormModel(BaseModel):
    """
    A bilinear form F(gen_i, gen_j) = zeta_N^(E_ij) on the generator basis.
    """

    cyclic_factors: List[int] = Field(default_factory=list)
    conductor: int = Field(ge=1)
    exponent_matrix: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_shape(self) -> "FormModel":
        r = len(self.cyclic_factors)
        if len(self.exponent_matrix) != r or any(len(row) != r for row in self.exponent_matrix):
            raise ValueError(f"exponent_matrix must be {r}x{r}")
        return self
