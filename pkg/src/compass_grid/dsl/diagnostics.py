from __future__ import annotations

from dataclasses import dataclass

from .ast import Span

# error codes
SYNTAX = "SyntaxError"
REDEFINITION = "Redefinition"
UNDEFINED = "UndefinedName"
KIND = "KindMismatch"
INVALID = "InvalidArgument"
DEGENERATE = "DegenerateGeometry"
NO_INTERSECTION = "NoSuchIntersection"


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # error | warning
    span: Span
    code: str
    message: str

    def __str__(self):
        return f"{self.span}: {self.severity}[{self.code}]: {self.message}"


class DiagnosticError(Exception):
    """Raised by parse/evaluate; carries every diagnostic produced."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))

    @property
    def codes(self) -> list[str]:
        return [d.code for d in self.diagnostics]
