"""Exact computations with curve classes on smooth Fano threefolds.

Cones and lattice points, Fujita invariants, the geometric Manin counting
function, monoid presentations, bend-and-break witnesses and a small
classification database. All arithmetic is exact.
"""

from __future__ import annotations

from .classification import derive_e_cubed, query
from .counting import alpha_constant, convergence_report, count_exact, growth_bound_check, predicted
from .errors import FanoCurvesError, InputError
from .invariants import a_invariant, b_invariant, verify_a_certificate
from .mbb import e5_chain_breakings, free_breakings, mbb_threshold, verify_mbb
from .models import FanoThreefoldModel, builtin, builtin_names, classify_class, find_model, validate_model
from .monoid import PresentedCommutativeMonoid, two_e5_presentation, verify_presentation

__version__ = "0.1.0"

__all__ = [
    "FanoCurvesError",
    "FanoThreefoldModel",
    "InputError",
    "PresentedCommutativeMonoid",
    "a_invariant",
    "alpha_constant",
    "b_invariant",
    "builtin",
    "builtin_names",
    "classify_class",
    "convergence_report",
    "count_exact",
    "derive_e_cubed",
    "e5_chain_breakings",
    "find_model",
    "free_breakings",
    "growth_bound_check",
    "mbb_threshold",
    "predicted",
    "query",
    "two_e5_presentation",
    "validate_model",
    "verify_a_certificate",
    "verify_mbb",
    "verify_presentation",
]
