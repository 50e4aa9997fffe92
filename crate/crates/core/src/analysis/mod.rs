//! Critical jumping rates, gaps, perturbation theory and full-graph checks.

pub mod critical;
pub mod perturbation;
pub mod verify;

pub use critical::{
    default_gamma, energy_gap, gamma_c_formula_k3, gamma_c_numeric, overlap_balance,
    predicted_peak_time, CriticalGammaResult, GammaMethod, MAX_BRACKET_EXPANSIONS,
};
pub use perturbation::{
    char_cubic_coeffs, effective_two_level, embed_u, first_order_correction, lambda_u,
    lambda_u_seed, leading_block, leading_hamiltonian, naive_residual, naive_splitting_diagnostic,
    perturbation_report, vector_u, EffectiveTwoLevel, NaiveSplitting, PerturbationReport,
};
pub use verify::{
    full_search_hamiltonian, full_success_curve, run_verification, Verification, FULL_MARKED_VERTEX,
};
