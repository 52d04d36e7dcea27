from enum import Enum


class ReportFormat_Enum(str, Enum):
    """
    Output format of CLI reports
    """

    Human = "human"
    Machine = "machine"
