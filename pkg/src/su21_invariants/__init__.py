"""Exact rational models of S(sl3) (x) Lambda(p) and U(sl3) (x) C(p),
with verification suites for their invariants under S(U(2) x U(1))."""

from . import clifford, dirac, enveloping, expr, invariants, lie, linalg, suites, symext
from .expr import format_element, parse_element
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "clifford",
    "dirac",
    "enveloping",
    "expr",
    "format_element",
    "invariants",
    "lie",
    "linalg",
    "parse_element",
    "run_suite",
    "suites",
    "symext",
]
