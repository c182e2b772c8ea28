"""Spectral portraits of non-self-adjoint model and Orr-Sommerfeld problems."""

from ._core import (
    ConfigError,
    ConvergenceFailure,
    DomainError,
    Error,
    LimitGraph,
    MatchReport,
    Overflow,
    Prediction,
    Profile,
    SpectralCurve,
    Spectrum,
    airy_connection_residual,
    airy_v,
    airy_zeros,
    limit_graph,
    match,
    model_spectrum,
    os_spectrum,
    predict,
    predict_os_couette,
    q_functionals,
    semistrip_excursion,
    symmetry_defect,
)

__all__ = [
    "ConfigError",
    "ConvergenceFailure",
    "DomainError",
    "Error",
    "LimitGraph",
    "MatchReport",
    "Overflow",
    "Prediction",
    "Profile",
    "SpectralCurve",
    "Spectrum",
    "airy_connection_residual",
    "airy_v",
    "airy_zeros",
    "limit_graph",
    "match",
    "model_spectrum",
    "os_spectrum",
    "predict",
    "predict_os_couette",
    "q_functionals",
    "semistrip_excursion",
    "symmetry_defect",
]
