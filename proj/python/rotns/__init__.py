"""Rotating Navier-Stokes on a periodic box: spectral operators, norms and solvers."""

from ._core import (
    CheckResult,
    FlowParams,
    Grid,
    PicardReport,
    SpectralField,
    TimeGrid,
    apply_semigroup,
    besov_norm,
    bilinear_bound_probe,
    hybrid_norm,
    if_step_final,
    leray_project,
    lp_norm,
    nonlinear_term,
    omega_weights,
    oscillating_vortex,
    picard_solve,
    random_solenoidal,
    read_snapshot,
    run_suite,
    sobolev_norm,
    suite_names,
    write_snapshot,
)

__all__ = [
    "CheckResult",
    "FlowParams",
    "Grid",
    "PicardReport",
    "SpectralField",
    "TimeGrid",
    "apply_semigroup",
    "besov_norm",
    "bilinear_bound_probe",
    "hybrid_norm",
    "if_step_final",
    "leray_project",
    "lp_norm",
    "nonlinear_term",
    "omega_weights",
    "oscillating_vortex",
    "picard_solve",
    "random_solenoidal",
    "read_snapshot",
    "run_suite",
    "sobolev_norm",
    "suite_names",
    "write_snapshot",
]
