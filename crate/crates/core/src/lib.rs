//! Numerical laboratory for the Pochhammer expansion of 1/zeta.
//!
//! The expansion 1/zeta(s) = sum_k c_k(alpha, beta) P_k(s, alpha, beta)
//! turns questions about zeta into questions about the decay of the
//! coefficients c_k. This crate computes those coefficients at scale
//! (windowed Möbius sums make k = 1e9 routine), scales them into the
//! critical function psi = c_k k^{(alpha-rho)/beta}, predicts the
//! large-k oscillation from nontrivial zeta zeros, and majorizes the
//! truncated wave for threshold studies.
//!
//! Modules map one-to-one onto the pipeline:
//!
//! - [`mobius`]: linear sieve for mu(n);
//! - [`special`]: zeta, zeta', complex gamma, and the zero table;
//! - [`coefficients`]: c_k by direct, exponential, and binomial routes;
//! - [`pochhammer`]: P_k at complex arguments and its large-k surrogate;
//! - [`wave`]: the zero-sum wave psi_bar, amplitudes, identity residual;
//! - [`bounds`]: the crude majorant, threshold solver, amplitude monitor;
//! - [`scanner`]: k-grids, beta sweeps, feature extraction, CSV/JSON;
//! - [`verify`]: the self-check suite behind `rhwave verify`.

pub mod bounds;
pub mod coefficients;
pub mod error;
pub mod kahan;
pub mod mobius;
pub mod pochhammer;
pub mod scanner;
pub mod special;
pub mod verify;
pub mod wave;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use bounds::{absolute_bound_monitor, crude_bound, threshold_x, BoundQuery, BoundReport};
pub use coefficients::{
    c_binomial, c_direct, c_exponential, poisson_mixture_check, psi, riesz_function,
    CoefficientResult, Method, ModelParams, SeriesKernel,
};
pub use kahan::KahanSum;
pub use mobius::{build_sieve, MobiusTable};
pub use pochhammer::{pochhammer_asymptotic, pochhammer_base, pochhammer_model, reciprocal_bd};
pub use scanner::{
    beta_sweep, extract_features, k_grid, run_scan, BetaScan, GridSpec, OscillationFeatures,
    OutputFormat, ScanConfig, SweepConfig, WaveSample,
};
pub use special::{build_zero_table, gamma_complex, zeta_complex, zeta_prime, zeta_real, ZeroRecord, ZeroTable};
pub use wave::{bd_identity_residual, first_zero_amplitude, psi_bar, WavePrediction};
