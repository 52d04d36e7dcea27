# ruff: noqa
from .cyclo_number import CycloNumberModel
from .datum import DatumModel, MultiplicityEntryModel
from .datum_report import DatumReportModel
from .engine_bounds import EngineBoundsModel
from .form import FormModel
from .generators import GeneratorsFileModel, SkewGeneratorModel
from .group import GroupModel
from .job_config import JobConfigModel
from .label_map import LabelEntryModel, LabelMapModel
from .rmatrix import RMatrixFileModel
from .structure import StructureFileModel
from .structure_choice import MMapEntryModel, StructureChoiceModel
from .verdict import CheckVerdictModel, VerdictReportModel
