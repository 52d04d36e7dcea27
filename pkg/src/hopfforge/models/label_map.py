from typing import List, Tuple

from pydantic import BaseModel, Field


class LabelEntryModel(BaseModel):
    """
    Basis label a * x_{s1} ... x_{sk} of H(D): group part and wedge part
    as (grade, index) pairs.
    """

    index: int = Field(ge=0)
    group_part: List[int]
    wedge_part: List[Tuple[List[int], int]] = Field(default_factory=list)


class LabelMapModel(BaseModel):
    labels: List[LabelEntryModel] = Field(default_factory=list)
