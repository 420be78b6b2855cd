"""Exact scattering states on the smooth hyperbolic-tangent potential step.

Thin re-export of the compiled extension.  Everything here maps 1:1 onto the
C++ library; see the README for the conventions (hbar^2/2m = 1, unit incident
amplitude from the left).
"""

from ._core import (
    AmplitudeSet,
    BelowRegimeError,
    CheckOptions,
    CheckResult,
    Coefficients,
    DegenerateInputError,
    DegenerateParametersError,
    DomainError,
    Error,
    HypMapping,
    IllConditionedError,
    InvalidCError,
    Kinematics,
    NoConvergenceError,
    NonPositiveEnergyError,
    OverflowGuardError,
    PoleError,
    Regime,
    ScatteringState,
    SingularWronskianError,
    StepPotential,
    UnstableGrowthError,
    WaveSample,
    amplitudes,
    amplitudes_perturbed,
    coefficients,
    coefficients_gamma_form,
    density_scan,
    gamma_abs_sq_one_plus_i_eta,
    hyp2f1,
    hyp2f1_deriv,
    hyp_mapping,
    kinematics,
    log_gamma,
    match_below,
    numerov,
    potential_value,
    run_checks,
    step_limit_amplitudes,
    step_limit_coefficients,
    wavefunction,
)

__all__ = [
    "AmplitudeSet",
    "BelowRegimeError",
    "CheckOptions",
    "CheckResult",
    "Coefficients",
    "DegenerateInputError",
    "DegenerateParametersError",
    "DomainError",
    "Error",
    "HypMapping",
    "IllConditionedError",
    "InvalidCError",
    "Kinematics",
    "NoConvergenceError",
    "NonPositiveEnergyError",
    "OverflowGuardError",
    "PoleError",
    "Regime",
    "ScatteringState",
    "SingularWronskianError",
    "StepPotential",
    "UnstableGrowthError",
    "WaveSample",
    "amplitudes",
    "amplitudes_perturbed",
    "coefficients",
    "coefficients_gamma_form",
    "density_scan",
    "gamma_abs_sq_one_plus_i_eta",
    "hyp2f1",
    "hyp2f1_deriv",
    "hyp_mapping",
    "kinematics",
    "log_gamma",
    "match_below",
    "numerov",
    "potential_value",
    "run_checks",
    "step_limit_amplitudes",
    "step_limit_coefficients",
    "wavefunction",
]

__version__ = "1.0.0"
