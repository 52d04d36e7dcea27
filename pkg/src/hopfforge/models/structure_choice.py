from typing import List

from pydantic import BaseModel, Field

from .cyclo_number import CycloNumberModel


class MMapEntryModel(BaseModel):
    """
    M_g as an n_g x n_{g^{-1}} matrix; row i is the image of x*_{g,i}.
    """

    grade: List[int]
    matrix: List[List[CycloNumberModel]]


class StructureChoiceModel(BaseModel):
    """
    T = (phi, (M_g)); phi is given by the images of the generator characters
    of the group with the listed cyclic factors.
    """

    cyclic_factors: List[int] = Field(default_factory=list)
    phi: List[List[int]]
    m_maps: List[MMapEntryModel] = Field(default_factory=list)
