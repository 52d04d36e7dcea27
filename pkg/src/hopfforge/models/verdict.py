from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class CheckVerdictModel(BaseModel):
    """
    Outcome of one named check, with the first counterexample on failure.
    """

    passed: bool = Field(alias="pass")
    witness: Optional[Any] = Field(default=None)
    model_config = ConfigDict(populate_by_name=True)


class VerdictReportModel(BaseModel):
    """
    A map of named checks to verdicts.
    """

    checks: Dict[str, CheckVerdictModel] = Field(default_factory=dict)

    def record(self, name: str, passed: bool, witness: Any = None) -> "VerdictReportModel":
        self.checks[name] = CheckVerdictModel(passed=passed, witness=None if passed else witness)
        return self

    def merge(self, other: "VerdictReportModel", prefix: str = "") -> "VerdictReportModel":
        for name, verdict in other.checks.items():
            self.checks[f"{prefix}{name}"] = verdict
        return self

    @property
    def all_passed(self) -> bool:
        return all(verdict.passed for verdict in self.checks.values())

    def failures(self) -> Dict[str, CheckVerdictModel]:
        return {name: v for name, v in self.checks.items() if not v.passed}

    def to_machine(self) -> Dict[str, Any]:
        """{check_name: {"pass": bool, "witness": ...}} in sorted order."""
        return {
            name: self.checks[name].model_dump(mode="json", by_alias=True)
            for name in sorted(self.checks)
        }
