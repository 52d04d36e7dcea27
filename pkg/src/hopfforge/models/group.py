from typing import List

from pydantic import BaseModel, Field, field_validator


class GroupModel(BaseModel):
    """
    A finite abelian group as a list of cyclic factor orders.
    """

    cyclic_factors: List[int] = Field(default_factory=list)

    @field_validator("cyclic_factors")
    @classmethod
    def validate_factors(cls, value: List[int]) -> List[int]:
        if any(d < 2 for d in value):
            raise ValueError("Cyclic factors must be at least 2")
        return value
