from ._core import (
    EulerWindow,
    PointState,
    SchemeFamily,
    basin_omega,
    chirkunov_from_flat,
    chirkunov_to_flat,
    determine_phi,
    energy_identity_residual,
    energy_identity_scale,
    eval_M1,
    eval_M2,
    family_coefficients,
    naive_energy_defect,
    naive_family,
    phi_cos,
    phi_cosh,
    preset_names,
    q_flux,
    residual_F1,
    residual_F2,
    run_verifier,
    solve_alpha_cauchy,
    tau1,
    tau2,
    thomas_solve,
)

__all__ = [
    "EulerWindow",
    "PointState",
    "SchemeFamily",
    "basin_omega",
    "chirkunov_from_flat",
    "chirkunov_to_flat",
    "determine_phi",
    "energy_identity_residual",
    "energy_identity_scale",
    "eval_M1",
    "eval_M2",
    "family_coefficients",
    "naive_energy_defect",
    "naive_family",
    "phi_cos",
    "phi_cosh",
    "preset_names",
    "q_flux",
    "residual_F1",
    "residual_F2",
    "run_verifier",
    "solve_alpha_cauchy",
    "tau1",
    "tau2",
    "thomas_solve",
]
