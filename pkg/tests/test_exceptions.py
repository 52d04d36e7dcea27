# ruff: noqa
"""Tests for exceptions.py."""

import pytest

from hopfforge.enums.error_code_enum import ERROR_DESCRIPTIONS, ErrorCode_Enum
from hopfforge.enums.exit_code_enum import ExitCode_Enum
from hopfforge.exceptions import (
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
    describe_error,
    error_code_for_exception,
    exit_code_for_exception,
)


def test_error_code_outside_hierarchy():
    """Test errors outside the hierarchy report an internal error."""
    assert error_code_for_exception(KeyError("bug")) == ErrorCode_Enum.internal_error
    assert error_code_for_exception(HopfForgeException("base")) == ErrorCode_Enum.internal_error


@pytest.mark.parametrize(
    "exception_class, error_code",
    [
        (BoundExceededError, ErrorCode_Enum.bound_exceeded),
        (DatumValidationError, ErrorCode_Enum.datum_invalid),
        (DeserializationError, ErrorCode_Enum.deserialization_error),
        (DimensionMismatchError, ErrorCode_Enum.dimension_mismatch),
        (DivisionByZeroError, ErrorCode_Enum.division_by_zero),
        (HypothesisViolationError, ErrorCode_Enum.hypothesis_violation),
        (InternalConsistencyError, ErrorCode_Enum.internal_error),
        (InvalidStructureChoiceError, ErrorCode_Enum.invalid_structure_choice),
        (PreconditionError, ErrorCode_Enum.precondition_failed),
        (SamplingError, ErrorCode_Enum.sampling_failed),
    ],
)
def test_error_code_for_exception(exception_class, error_code):
    """Test each exception carries its error code and description."""
    error = exception_class("message")
    assert error_code_for_exception(error) == error_code
    assert describe_error(error) == ERROR_DESCRIPTIONS[error_code]


@pytest.mark.parametrize(
    "error, exit_code",
    [
        (BoundExceededError("too big"), ExitCode_Enum.BoundExceeded),
        (HypothesisViolationError("not triangular"), ExitCode_Enum.VerificationFailed),
        (InternalConsistencyError("broken"), ExitCode_Enum.VerificationFailed),
        (InvalidStructureChoiceError("bad T"), ExitCode_Enum.VerificationFailed),
        (DatumValidationError("bad datum"), ExitCode_Enum.InputError),
        (DeserializationError("bad file"), ExitCode_Enum.InputError),
        (PreconditionError("no structure"), ExitCode_Enum.InputError),
        (SamplingError("singular"), ExitCode_Enum.InputError),
    ],
)
def test_exit_code_for_exception(error, exit_code):
    """Test exceptions map to process exit codes."""
    assert exit_code_for_exception(error) == exit_code


def test_hypothesis_violation_witness():
    """Test the witness travels with the exception."""
    error = HypothesisViolationError("R is not triangular", witness=["intertwiner"])
    assert error.witness == ["intertwiner"]
    assert str(error) == "R is not triangular"
    assert HypothesisViolationError("no witness").witness is None


def test_division_by_zero_is_zero_division():
    """Test DivisionByZeroError can be caught as ZeroDivisionError."""
    with pytest.raises(ZeroDivisionError):
        raise DivisionByZeroError("1/0")
