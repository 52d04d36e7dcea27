from typing import List

from pydantic import BaseModel, Field

from .verdict import VerdictReportModel


class DatumReportModel(BaseModel):
    """
    Validation of a datum plus the facts derived from it.
    """

    valid: bool
    report: VerdictReportModel = Field(default_factory=VerdictReportModel)
    group_order: int
    dimension: int
    i_f: List[List[int]] = Field(default_factory=list)
    i_f_prime: List[List[int]] = Field(default_factory=list)
    feasible: bool
