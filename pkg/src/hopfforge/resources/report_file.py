from typing import Any

from ..mixins import DumpableFileResource
from ..models.verdict import VerdictReportModel


class ReportFile(DumpableFileResource):
    """
    Machine verdict report: {check_name: {"pass": bool, "witness": ...}}.
    """

    MODEL = VerdictReportModel
    RESOURCE_NAME = "report"

    @classmethod
    def to_model(cls, report: VerdictReportModel) -> VerdictReportModel:
        return report

    @classmethod
    def serialize(cls, report: VerdictReportModel) -> Any:
        return report.to_machine()
