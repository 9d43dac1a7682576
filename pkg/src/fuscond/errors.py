"""Shared exception types and the validation report container."""
from __future__ import annotations

from dataclasses import dataclass, field


class CapabilityError(Exception):
    """Requested computation exceeds a documented size cap."""


class NumericalDegeneracyError(Exception):
    """Numerical splitting or rounding failed beyond the retry budget."""


class TheoremViolationError(Exception):
    """Data contradicts an identity that should hold for valid inputs."""


class NotSemisimpleError(Exception):
    """Block dimensions do not round to squares; input algebra is not
    semisimple over the complex numbers."""


class SchemaError(Exception):
    """Input file does not conform to a known schema."""


@dataclass
class ValidationReport:
    """Outcome of a structural validation pass.

    `problems` is empty exactly when every checked axiom holds.  Each entry
    names the axiom and the offending index tuples (possibly truncated).
    """

    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def add(self, message: str) -> None:
        self.problems.append(message)

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for p in other.problems:
            self.problems.append(prefix + p)

    def __str__(self) -> str:
        if self.ok:
            return "all checks passed"
        return "\n".join(self.problems)
