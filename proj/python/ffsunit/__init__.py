"""Exact S-unit solver for split linear recurrences over Q(x)."""

from ._core import (
    ExprSyntaxError,
    HypothesisViolation,
    InputError,
    MathDomainError,
    bound,
    divisor,
    height,
    is_s_unit,
    lattice_gap,
    parse,
    solve,
    term,
    verify,
    window_scan,
)

__all__ = [
    "ExprSyntaxError",
    "HypothesisViolation",
    "InputError",
    "MathDomainError",
    "bound",
    "divisor",
    "height",
    "is_s_unit",
    "lattice_gap",
    "parse",
    "solve",
    "term",
    "verify",
    "window_scan",
]
