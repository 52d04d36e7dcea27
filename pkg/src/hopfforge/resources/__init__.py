# ruff: noqa

from .datum_file import DatumFile
from .generators_file import GeneratorsData, GeneratorsFile
from .label_map_file import LabelMapFile
from .report_file import ReportFile
from .rmatrix_file import RMatrixData, RMatrixFile
from .structure_choice_file import StructureChoiceFile
from .structure_file import StructureFile

__all__ = [
    "DatumFile",
    "GeneratorsData",
    "GeneratorsFile",
    "LabelMapFile",
    "ReportFile",
    "RMatrixData",
    "RMatrixFile",
    "StructureChoiceFile",
    "StructureFile",
]
