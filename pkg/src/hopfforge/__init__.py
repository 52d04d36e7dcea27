# ruff: noqa

from importlib.metadata import PackageNotFoundError, version  # pragma: no cover

try:
    # Change here if project is renamed and does not equal the package name
    dist_name = "hopfforge"
    __version__ = version(dist_name)
except PackageNotFoundError:  # pragma: no cover
    __version__ = "unknown"
finally:
    del version, PackageNotFoundError

from .abgroup import (
    CharacterIsomorphism,
    FiniteAbelianGroup,
    SkewForm,
    enumerate_forms,
    enumerate_phi,
    form_eval,
    form_inverse_map,
    forms_up_to_automorphism,
    u_f_and_i_f,
    validate_form,
)
from .base import JobRunner
from .configuration import configure, get_bounds, reset
from .cyclo import CycloNumber, discrete_log, root_of_unity
from .enums.exit_code_enum import ExitCode_Enum
from .enums.report_format_enum import ReportFormat_Enum
from .exceptions import (
    BoundExceededError,
    DatumValidationError,
    DeserializationError,
    DimensionMismatchError,
    DivisionByZeroError,
    HopfForgeException,
    HypothesisViolationError,
    InternalConsistencyError,
    InvalidStructureChoiceError,
    PreconditionError,
    SamplingError,
)
from .hd_builder import (
    Datum,
    GeneratorSymbol,
    HDAlgebra,
    HDBasisLabel,
    build_hd,
    normalize_word,
    projection_and_biproduct,
    validate_datum,
    verify_relations,
)
from .hopf_core import (
    HopfStructure,
    LinearMap,
    coradical_level1,
    cop_flip,
    dual_hopf,
    group_algebra,
    is_grouplike,
    is_hopf_map,
    skew_primitive_space,
    verify_hopf_axioms,
)
from .models.engine_bounds import EngineBoundsModel
from .models.verdict import CheckVerdictModel, VerdictReportModel
from .resources import (
    DatumFile,
    GeneratorsFile,
    LabelMapFile,
    ReportFile,
    RMatrixFile,
    StructureChoiceFile,
    StructureFile,
)
from .triangular import (
    StructureChoice,
    build_f_T,
    build_rmatrix,
    drinfeld_analysis,
    drinfeld_element,
    extract_datum,
    minimality_rank,
    rmatrix_from_f,
    sample_sk,
    sample_structure_choices,
    validate_structure_choice,
    verify_triangular,
)

__all__ = [
    "__version__",
    "JobRunner",
    "configure",
    "get_bounds",
    "reset",
    "CycloNumber",
    "discrete_log",
    "root_of_unity",
    "CharacterIsomorphism",
    "FiniteAbelianGroup",
    "SkewForm",
    "enumerate_forms",
    "enumerate_phi",
    "form_eval",
    "form_inverse_map",
    "forms_up_to_automorphism",
    "u_f_and_i_f",
    "validate_form",
    "HopfStructure",
    "LinearMap",
    "coradical_level1",
    "cop_flip",
    "dual_hopf",
    "group_algebra",
    "is_grouplike",
    "is_hopf_map",
    "skew_primitive_space",
    "verify_hopf_axioms",
    "Datum",
    "GeneratorSymbol",
    "HDAlgebra",
    "HDBasisLabel",
    "build_hd",
    "normalize_word",
    "projection_and_biproduct",
    "validate_datum",
    "verify_relations",
    "StructureChoice",
    "build_f_T",
    "build_rmatrix",
    "drinfeld_analysis",
    "drinfeld_element",
    "extract_datum",
    "minimality_rank",
    "rmatrix_from_f",
    "sample_sk",
    "sample_structure_choices",
    "validate_structure_choice",
    "verify_triangular",
    "EngineBoundsModel",
    "CheckVerdictModel",
    "VerdictReportModel",
    "ExitCode_Enum",
    "ReportFormat_Enum",
    "DatumFile",
    "GeneratorsFile",
    "LabelMapFile",
    "ReportFile",
    "RMatrixFile",
    "StructureChoiceFile",
    "StructureFile",
    "BoundExceededError",
    "DatumValidationError",
    "DeserializationError",
    "DimensionMismatchError",
    "DivisionByZeroError",
    "HopfForgeException",
    "HypothesisViolationError",
    "InternalConsistencyError",
    "InvalidStructureChoiceError",
    "PreconditionError",
    "SamplingError",
]
