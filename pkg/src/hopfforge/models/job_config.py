from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..enums.report_format_enum import ReportFormat_Enum
from .engine_bounds import EngineBoundsModel


class JobConfigModel(BaseModel):
    """
    One command line invocation.
    """

    command: str
    inputs: List[str] = Field(default_factory=list)
    options: Dict[str, str] = Field(default_factory=dict)
    seed: int = Field(default=0)
    bounds: EngineBoundsModel = Field(default_factory=EngineBoundsModel)
    output: Optional[str] = Field(default=None)
    report_format: ReportFormat_Enum = Field(default=ReportFormat_Enum.Human)
    samples: int = Field(default=1, ge=0)
    up_to_automorphism: bool = Field(default=False)
    log_level: str = Field(default="WARNING")
    model_config = ConfigDict(populate_by_name=True)
