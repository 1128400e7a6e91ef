"""Minimum-time paths for a fixed-wing vehicle meeting a goal pose in steady wind."""

from ._core import (
    Family,
    PathCandidate,
    PlanResult,
    Scenario,
    ToleranceSet,
    ValidationReport,
    Variant,
    plan,
    sample,
    solve_envelope,
    solve_quadcos,
    solve_sinusoid,
    validate,
)

__all__ = [
    "Family",
    "PathCandidate",
    "PlanResult",
    "Scenario",
    "ToleranceSet",
    "ValidationReport",
    "Variant",
    "plan",
    "sample",
    "solve_envelope",
    "solve_quadcos",
    "solve_sinusoid",
    "validate",
]
