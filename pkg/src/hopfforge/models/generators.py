from typing import List, Optional

from pydantic import BaseModel, Field

from .structure import SparseEntry


class SkewGeneratorModel(BaseModel):
    """
    A (1, g)-skew primitive generator with its grade g.
    """

    grade: List[int]
    element: List[SparseEntry]


class GeneratorsFileModel(BaseModel):
    """
    Algebra generators: grouplikes generating G(A) in cyclic-factor order,
    optionally the skew primitive generators.
    """

    grouplikes: List[List[SparseEntry]] = Field(default_factory=list)
    skew_primitives: Optional[List[SkewGeneratorModel]] = Field(default=None)
