"""Shared validation report machinery.

Validation problems come in two flavors: rule violations that are part of
the normal return value (a report), and hard errors (unknown references,
dimension mismatches) that raise.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    rule: str  # machine-readable rule id, e.g. "duplicate_id", "monotonicity"
    subject: str  # the offending criterion / object name
    message: str

    def as_dict(self) -> dict:
        return {"rule": self.rule, "subject": self.subject, "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.as_dict() for v in self.violations]}

    def messages(self) -> list[str]:
        return [f"[{v.rule}] {v.subject}: {v.message}" for v in self.violations]


class ModelError(ValueError):
    """Hard error: bad reference, dimension mismatch, unusable input."""


class InvalidCapacityError(ModelError):
    """A capacity failed validation; carries the full report."""

    def __init__(self, report: ValidationReport):
        super().__init__("; ".join(report.messages()) or "invalid capacity")
        self.report = report
