from fractions import Fraction
from typing import List

from pydantic import BaseModel, Field, field_validator


class CycloNumberModel(BaseModel):
    """
    Serialized cyclotomic number: conductor and power-basis coefficients as
    rational strings such as "-1/2".
    """

    conductor: int = Field(ge=1)
    coeffs: List[str] = Field(min_length=1)

    @field_validator("coeffs")
    @classmethod
    def validate_coeffs(cls, value: List[str]) -> List[str]:
        for entry in value:
            if "." in entry or "e" in entry.lower():
                raise ValueError(f"Coefficient {entry!r} must be a decimal-free rational")
            try:
                Fraction(entry)
            except (ValueError, ZeroDivisionError) as error:
                raise ValueError(f"Coefficient {entry!r} is not a rational") from error
        return value
