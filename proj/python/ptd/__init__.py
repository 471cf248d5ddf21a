"""Closed-form bound states of the D-dimensional hyperbolic well
V(r) = -V0 / cosh^2(alpha r): spectrum, wavefunctions, expectation values,
and an independent shooting-method eigensolver."""

from ._core import (
    InapplicableError,
    NoBoundStateError,
    count_bound_states,
    critical_alpha,
    energy,
    energy_principal,
    expectation_report,
    is_bound,
    norm_constant,
    numerov_energy,
    radial_wavefunction,
)

__all__ = [
    "InapplicableError",
    "NoBoundStateError",
    "count_bound_states",
    "critical_alpha",
    "energy",
    "energy_principal",
    "expectation_report",
    "is_bound",
    "norm_constant",
    "numerov_energy",
    "radial_wavefunction",
]
