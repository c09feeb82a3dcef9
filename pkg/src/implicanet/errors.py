"""Shared error types and report-only validation findings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal


class ParseError(ValueError):
    """An input document is malformed (ragged grid, bad counts, bad header)."""


class ValidationError(ValueError):
    """A value or data structure violates a domain invariant."""


class SamplingError(RuntimeError):
    """Monte Carlo sampling rejected too many draws to report a result."""


Severity = Literal["error", "warning"]


@dataclass(frozen=True)
class Finding:
    """One item produced by a report-only validator."""

    severity: Severity
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


def errors_in(findings: list[Finding]) -> list[Finding]:
    return [f for f in findings if f.severity == "error"]
