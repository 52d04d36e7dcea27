from enum import Enum


class ErrorCode_Enum(str, Enum):
    """
    Engine error codes
    """

    bound_exceeded = "BoundExceeded"
    datum_invalid = "DatumInvalid"
    deserialization_error = "DeserializationError"
    dimension_mismatch = "DimensionMismatch"
    division_by_zero = "DivisionByZero"
    hypothesis_violation = "HypothesisViolation"
    internal_error = "InternalError"
    invalid_structure_choice = "InvalidStructureChoice"
    precondition_failed = "PreconditionFailed"
    sampling_failed = "SamplingFailed"


ERROR_DESCRIPTIONS = {
    ErrorCode_Enum.bound_exceeded: "The input exceeds a configured desk-scale bound.",
    ErrorCode_Enum.datum_invalid: "The datum violates one of its defining invariants.",
    ErrorCode_Enum.deserialization_error: "The input file could not be parsed or validated.",
    ErrorCode_Enum.dimension_mismatch: "Operands live in spaces of different dimension.",
    ErrorCode_Enum.division_by_zero: "Attempted to invert zero.",
    ErrorCode_Enum.hypothesis_violation: "The input is not a minimal triangular pair that datum recognition accepts.",
    ErrorCode_Enum.internal_error: "An internal consistency check failed.",
    ErrorCode_Enum.invalid_structure_choice: "The structure choice (phi, M) is not admissible for the datum.",
    ErrorCode_Enum.precondition_failed: "An operation precondition does not hold.",
    ErrorCode_Enum.sampling_failed: "Sampling exhausted its redraw attempts.",
}
