from __future__ import annotations

from typing import Self

from pydantic import BaseModel, model_validator


class CheckResult(BaseModel):
    """Outcome of one oracle check. A failing check always names a witness."""

    name: str
    passed: bool
    witness: list[int] | None = None
    detail: str = ""

    @model_validator(mode="after")
    def _failures_have_witness(self) -> Self:
        if not self.passed and self.witness is None:
            raise ValueError(f"failing check {self.name!r} needs a witness")
        return self

    @classmethod
    def ok(cls, name: str, detail: str = "") -> Self:
        return cls(name=name, passed=True, detail=detail)

    @classmethod
    def fail(cls, name: str, witness: list[int], detail: str) -> Self:
        return cls(name=name, passed=False, witness=witness, detail=detail)


class OracleReport(BaseModel):
    checks: list[CheckResult] = []

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result
