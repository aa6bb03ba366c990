"""Construction script language (``.csl``): parser, evaluator and formatter."""
from .ast import Program, Span
from .diagnostics import Diagnostic, DiagnosticError
from .evaluator import evaluate
from .formatter import format_program
from .parser import check, parse

format = format_program

__all__ = [
    "Program",
    "Span",
    "Diagnostic",
    "DiagnosticError",
    "parse",
    "check",
    "evaluate",
    "format_program",
    "format",
    "run",
]


def run(source: str):
    """parse + evaluate."""
    return evaluate(parse(source))
