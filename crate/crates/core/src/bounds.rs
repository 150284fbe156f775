//! Crude majorant of the truncated critical function and its threshold
//! solver, plus the global amplitude monitor.
//!
//! Setting |mu(n)| = 1 in the direct sum with cutoff N bounds the truncated
//! critical function f_k(alpha, beta, N) by
//!
//!     (zeta(alpha) - 1) exp(((alpha - 1/2)/beta) x - e^x / N^beta),
//!
//! in x = ln k. The exponent rises to a single interior maximum at
//! x* = ln(N^beta (alpha - 1/2) / beta) and then collapses doubly
//! exponentially, so thresholds are found by bisection right of x*.

use crate::coefficients::ModelParams;
use crate::error::{Error, Result};
use crate::scanner::WaveSample;
use crate::special::zeta_real;

/// |1/zeta(1/2) - 1|: the conjectured absolute amplitude cap. Monitored,
/// never asserted.
pub const ABSOLUTE_BOUND: f64 = 1.6847652360899365;

/// Threshold query: find where the majorant drops below `target_amplitude`
/// for good, with sieve cutoff `sieve_cap`.
#[derive(Clone, Copy, Debug)]
pub struct BoundQuery {
    pub params: ModelParams,
    pub sieve_cap: u64,
    pub target_amplitude: f64,
}

impl BoundQuery {
    pub fn new(params: ModelParams, sieve_cap: u64, target_amplitude: f64) -> Result<Self> {
        if sieve_cap < 2 {
            return Err(Error::InvalidConfig {
                reason: format!("sieve cap {sieve_cap} must be at least 2"),
            });
        }
        if !(target_amplitude > 0.0) {
            return Err(Error::InvalidConfig {
                reason: format!("target amplitude {target_amplitude} must be positive"),
            });
        }
        Ok(Self {
            params,
            sieve_cap,
            target_amplitude,
        })
    }
}

fn check_alpha(params: &ModelParams) -> Result<f64> {
    // zeta(alpha) must be finite
    if params.alpha() <= 1.0 {
        return Err(Error::InvalidModel {
            reason: format!("crude bound needs alpha > 1, got {}", params.alpha()),
        });
    }
    Ok(zeta_real(params.alpha())? - 1.0)
}

#[inline]
fn suppression_exponent(params: &ModelParams, n_cap: u64, x: f64) -> f64 {
    // e^x / N^beta, formed in log space so N^beta never overflows
    (x - params.beta() * (n_cap as f64).ln()).exp()
}

/// Majorant with the large-N simplification ln(1 - N^{-beta}) ~ -N^{-beta}.
pub fn crude_bound(params: &ModelParams, n_cap: u64, x: f64) -> Result<f64> {
    let prefactor = check_alpha(params)?;
    let exponent = (params.alpha() - 0.5) / params.beta() * x - suppression_exponent(params, n_cap, x);
    Ok(prefactor * exponent.exp())
}

/// Majorant with the exact weight logarithm ln(1 - N^{-beta}).
pub fn crude_bound_exact(params: &ModelParams, n_cap: u64, x: f64) -> Result<f64> {
    let prefactor = check_alpha(params)?;
    let q = (n_cap as f64).powf(-params.beta());
    let exponent = (params.alpha() - 0.5) / params.beta() * x + (-q).ln_1p() * x.exp();
    Ok(prefactor * exponent.exp())
}

/// Smallest x (0.1 resolution) past which the majorant stays below the
/// target. Returns 0 when even the global maximum sits below the target.
pub fn threshold_x(query: &BoundQuery) -> Result<f64> {
    let params = &query.params;
    let target = query.target_amplitude;
    let x_star =
        params.beta() * (query.sieve_cap as f64).ln() + ((params.alpha() - 0.5) / params.beta()).ln();
    if crude_bound(params, query.sieve_cap, x_star)? <= target {
        return Ok(0.0);
    }
    let mut lo = x_star;
    let mut hi = x_star + 1.0;
    while crude_bound(params, query.sieve_cap, hi)? > target {
        lo = hi;
        hi += 1.0;
    }
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if crude_bound(params, query.sieve_cap, mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi) * 10.0).round() / 10.0)
}

/// Outcome of scanning a wave for the conjectured absolute cap.
#[derive(Clone, Copy, Debug)]
pub struct BoundReport {
    pub max_abs_psi: f64,
    /// ABSOLUTE_BOUND - max|psi|; negative margins are flagged, never asserted.
    pub margin: f64,
    pub exceeded: bool,
    pub samples: usize,
}

/// Report the largest |psi| seen against the conjectured cap.
pub fn absolute_bound_monitor(samples: &[WaveSample]) -> BoundReport {
    let max_abs_psi = samples.iter().map(|s| s.psi.abs()).fold(0.0, f64::max);
    BoundReport {
        max_abs_psi,
        margin: ABSOLUTE_BOUND - max_abs_psi,
        exceeded: max_abs_psi > ABSOLUTE_BOUND,
        samples: samples.len(),
    }
}
