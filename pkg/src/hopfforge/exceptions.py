from typing import Any, Optional

from .enums.error_code_enum import ERROR_DESCRIPTIONS, ErrorCode_Enum
from .enums.exit_code_enum import ExitCode_Enum


class HopfForgeException(Exception):
    """Base exception for the engine."""

    error_code = ErrorCode_Enum.internal_error


class DivisionByZeroError(HopfForgeException, ZeroDivisionError):
    """Raised when zero is inverted."""

    error_code = ErrorCode_Enum.division_by_zero


class DimensionMismatchError(HopfForgeException):
    """Raised when operands have incompatible dimensions."""

    error_code = ErrorCode_Enum.dimension_mismatch


class PreconditionError(HopfForgeException):
    """Raised when an operation precondition does not hold."""

    error_code = ErrorCode_Enum.precondition_failed


class BoundExceededError(HopfForgeException):
    """Raised when an input exceeds a configured bound."""

    error_code = ErrorCode_Enum.bound_exceeded


class DatumValidationError(HopfForgeException):
    """Raised when a datum is used for construction but is not valid."""

    error_code = ErrorCode_Enum.datum_invalid


class SamplingError(HopfForgeException):
    """Raised when seeded sampling runs out of redraw attempts."""

    error_code = ErrorCode_Enum.sampling_failed


class InvalidStructureChoiceError(HopfForgeException):
    """Raised when T = (phi, M) is not admissible."""

    error_code = ErrorCode_Enum.invalid_structure_choice


class InternalConsistencyError(HopfForgeException):
    """Raised when a result that must hold by construction fails to verify."""

    error_code = ErrorCode_Enum.internal_error


class HypothesisViolationError(HopfForgeException):
    """Raised when recognition input is outside the classification hypotheses."""

    error_code = ErrorCode_Enum.hypothesis_violation

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class DeserializationError(HopfForgeException):
    """Raised when an input file cannot be parsed or validated."""

    error_code = ErrorCode_Enum.deserialization_error


def error_code_for_exception(error: BaseException) -> ErrorCode_Enum:
    """
    Maps an exception to its engine error code.
    Anything outside the hierarchy is reported as an internal error.
    """
    return getattr(error, "error_code", ErrorCode_Enum.internal_error)


def describe_error(error: BaseException) -> str:
    """The fixed description of the error's code."""
    return ERROR_DESCRIPTIONS[error_code_for_exception(error)]


def exit_code_for_exception(error: BaseException) -> ExitCode_Enum:
    """
    Maps an exception raised by a command to the process exit code.
    """
    if isinstance(error, BoundExceededError):
        return ExitCode_Enum.BoundExceeded
    if isinstance(
        error,
        (HypothesisViolationError, InternalConsistencyError, InvalidStructureChoiceError),
    ):
        return ExitCode_Enum.VerificationFailed
    return ExitCode_Enum.InputError
