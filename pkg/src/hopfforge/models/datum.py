from typing import List

from pydantic import BaseModel, Field

from .form import FormModel
from .group import GroupModel


class MultiplicityEntryModel(BaseModel):
    """
    n_g for one element g of I_F.
    """

    element: List[int]
    value: int = Field(ge=0)


class DatumModel(BaseModel):
    """
    A datum (G, F, n).
    """

    group: GroupModel
    form: FormModel
    n: List[MultiplicityEntryModel] = Field(default_factory=list)
