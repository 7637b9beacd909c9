"""Exception hierarchy.

Every error raised on bad input derives from ``InputError`` so the CLI can
map it to exit status 2.
"""

from __future__ import annotations


class FanoCurvesError(Exception):
    pass


class InputError(FanoCurvesError, ValueError):
    """Malformed or mismatched input (rank mismatch, bad file, bad flag)."""


class UnsupportedConeError(InputError):
    """Cone is not pointed or not full-dimensional."""


class GradingError(InputError):
    """Degree functional is not strictly positive on the cone."""


class IncompletenessError(FanoCurvesError):
    """A computed Hilbert basis failed its decomposition check."""


class ModelError(InputError):
    pass


class UnsupportedInputError(InputError):
    pass


class UndefinedInvariantError(FanoCurvesError):
    pass


class IncompleteRuleError(FanoCurvesError):
    """An explicit component-count table lacks a class that the count needs."""


class DivergentPredictionError(InputError):
    pass


class QueryError(InputError):
    pass


class TableInconsistencyError(FanoCurvesError):
    pass
