"""Exact skein computations for the three-twist knot complement.

The boundary torus carries a noncommutative algebra spanned by curve
classes (p,q)_T; the knot complement's module is free on x^n y^k with
0 <= k <= 3.  This package recomputes the generator actions from
recursion seeds, extracts the two coefficient tables, and checks the
results against stored reference displays.
"""

from __future__ import annotations

from .bivariate import SkeinElement
from .boundary import ActionEngine, GeneratorActionTable, act, axiom_check
from .chebyshev import cheb_S, cheb_T
from .errors import (
    DegreeTooHigh,
    InvalidKey,
    InvariantViolation,
    NonUnitLeadingCoefficient,
    NotAUnit,
    NotInQ,
    ParseError,
    SeedsMissing,
    SkeinAlgError,
)
from .laurent import LaurentPoly, format_laurent, parse_laurent
from .parsing import format_torus, format_xy, parse_expression, parse_torus, parse_xy
from .torus import TorusElement
from .version import __version__

__all__ = [
    "ActionEngine",
    "DegreeTooHigh",
    "GeneratorActionTable",
    "InvalidKey",
    "InvariantViolation",
    "LaurentPoly",
    "NonUnitLeadingCoefficient",
    "NotAUnit",
    "NotInQ",
    "ParseError",
    "SeedsMissing",
    "SkeinAlgError",
    "SkeinElement",
    "TorusElement",
    "__version__",
    "act",
    "axiom_check",
    "cheb_S",
    "cheb_T",
    "format_laurent",
    "format_torus",
    "format_xy",
    "parse_expression",
    "parse_laurent",
    "parse_torus",
    "parse_xy",
]
