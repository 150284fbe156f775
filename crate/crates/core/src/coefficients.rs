//! Expansion coefficients c_k(alpha, beta) of 1/zeta in the two-parameter
//! Pochhammer basis, by three routes:
//!
//! - direct Möbius sum with weight (1 - n^{-beta})^k,
//! - the exponential surrogate with weight e^{-k/n^beta},
//! - the binomial form over 1/zeta(alpha + beta j), exact but capped at
//!   k = 40 by binary64 cancellation.
//!
//! The direct and exponential sums share one windowing rule: a term is
//! skipped while k * n^{-beta} > 745, where its weight sits below the
//! smallest positive normal and cannot move any accumulating sum. Weights
//! are powered as exp(k * ln1p(-n^{-beta})), never by repeated
//! multiplication, which is what keeps k = 1e9 affordable.

use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::mobius::MobiusTable;
use crate::special::zeta_real;

/// Weight exponent below which a term underflows any binary64 sum.
pub const WINDOW_KNEE: f64 = 745.0;

/// Cancellation ceiling for the binomial route.
pub const BINOMIAL_MAX_K: u64 = 40;

/// Ceiling for the Poisson mixture diagnostic.
pub const MIXTURE_MAX_K: u64 = 200;

/// One (alpha, beta) model with the critical abscissa rho (default 1/2).
///
/// `new` admits the absolutely convergent regime alpha > 1. The range
/// 1/2 < alpha <= 1 is reachable only through `exploratory`, where the
/// expansion is no longer absolutely convergent and tail bounds degrade
/// to infinity; callers surface that mode to users as a warning.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    alpha: f64,
    beta: f64,
    rho: f64,
    exploratory: bool,
}

impl ModelParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        Self::with_rho(alpha, beta, 0.5)
    }

    pub fn with_rho(alpha: f64, beta: f64, rho: f64) -> Result<Self> {
        Self::validate_common(alpha, beta, rho)?;
        if alpha <= 1.0 {
            return Err(Error::InvalidModel {
                reason: format!(
                    "alpha = {alpha} requires alpha > 1; use exploratory mode for 1/2 < alpha <= 1"
                ),
            });
        }
        Ok(Self {
            alpha,
            beta,
            rho,
            exploratory: false,
        })
    }

    /// Admit 1/2 < alpha <= 1 (and anything above) without absolute
    /// convergence guarantees.
    pub fn exploratory(alpha: f64, beta: f64) -> Result<Self> {
        Self::exploratory_with_rho(alpha, beta, 0.5)
    }

    pub fn exploratory_with_rho(alpha: f64, beta: f64, rho: f64) -> Result<Self> {
        Self::validate_common(alpha, beta, rho)?;
        if alpha <= 0.5 {
            return Err(Error::InvalidModel {
                reason: format!("alpha = {alpha} must exceed 1/2 even in exploratory mode"),
            });
        }
        Ok(Self {
            alpha,
            beta,
            rho,
            exploratory: alpha <= 1.0,
        })
    }

    fn validate_common(alpha: f64, beta: f64, rho: f64) -> Result<()> {
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::InvalidModel {
                reason: format!("beta = {beta} must be a positive real"),
            });
        }
        if !alpha.is_finite() || !rho.is_finite() {
            return Err(Error::InvalidModel {
                reason: format!("alpha = {alpha}, rho = {rho} must be finite"),
            });
        }
        Ok(())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn is_exploratory(&self) -> bool {
        self.exploratory
    }

    /// Exponent (alpha - rho)/beta scaling c_k into the critical function.
    pub fn decay_exponent(&self) -> f64 {
        (self.alpha - self.rho) / self.beta
    }

    /// Reduced Pochhammer argument z = (s - alpha)/beta + 1.
    pub fn reduced_argument(&self, s: Complex64) -> Complex64 {
        (s - self.alpha) / self.beta + 1.0
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha={}, beta={}, rho={})", self.alpha, self.beta, self.rho)
    }
}

/// Summation route for c_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Exponential,
    Binomial,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Direct => write!(f, "direct"),
            Method::Exponential => write!(f, "exp"),
            Method::Binomial => write!(f, "binomial"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Method::Direct),
            "exp" | "exponential" => Ok(Method::Exponential),
            "binomial" => Ok(Method::Binomial),
            other => Err(Error::InvalidConfig {
                reason: format!("unknown method '{other}' (expected direct|exp|binomial)"),
            }),
        }
    }
}

/// One computed coefficient with its truncation accounting.
#[derive(Clone, Copy, Debug)]
pub struct CoefficientResult {
    pub value: f64,
    /// Bound on the dropped tail: N^{1-alpha}/(alpha-1), from |mu| <= 1 and
    /// weights <= 1. Infinite in exploratory mode (alpha <= 1); zero for the
    /// binomial route, which has no cutoff.
    pub tail_bound: f64,
    /// Lattice points inside the summation window.
    pub terms_used: u64,
    pub method: Method,
}

/// Precomputed per-(model, table) series data: mu(n) n^{-alpha} together
/// with both weight exponents. Building it costs one pass over the table;
/// each coefficient afterwards costs one exp per squarefree window term,
/// which is what scan grids want.
pub struct SeriesKernel {
    params: ModelParams,
    limit: u64,
    tail_bound: f64,
    ns: Vec<f64>,
    mu_over_na: Vec<f64>,
    log_direct: Vec<f64>, // ln(1 - n^{-beta}); -inf at n = 1
    neg_q: Vec<f64>,      // -n^{-beta}
}

impl SeriesKernel {
    pub fn new(params: &ModelParams, table: &MobiusTable) -> Result<Self> {
        if table.limit() < 2 {
            return Err(Error::InvalidConfig {
                reason: format!("sieve limit {} too small; need at least 2", table.limit()),
            });
        }
        let mut ns = Vec::new();
        let mut mu_over_na = Vec::new();
        let mut log_direct = Vec::new();
        let mut neg_q = Vec::new();
        for (n, mu) in table.iter_nonzero() {
            let nf = n as f64;
            let q = nf.powf(-params.beta);
            ns.push(nf);
            mu_over_na.push(mu as f64 * nf.powf(-params.alpha));
            log_direct.push((-q).ln_1p());
            neg_q.push(-q);
        }
        Ok(Self {
            params: *params,
            limit: table.limit(),
            tail_bound: tail_bound(params, table.limit()),
            ns,
            mu_over_na,
            log_direct,
            neg_q,
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest n whose weight survives the underflow knee.
    fn window_start(&self, k: u64) -> u64 {
        if k == 0 {
            return 1;
        }
        let kf = k as f64;
        let beta = self.params.beta;
        let mut n = ((kf / WINDOW_KNEE).powf(1.0 / beta).floor() as u64).max(1);
        while kf * (n as f64).powf(-beta) > WINDOW_KNEE {
            n += 1;
        }
        while n > 1 && kf * ((n - 1) as f64).powf(-beta) <= WINDOW_KNEE {
            n -= 1;
        }
        n
    }

    pub fn coefficient(&self, method: Method, k: u64) -> Result<CoefficientResult> {
        let weights: &[f64] = match method {
            Method::Direct => &self.log_direct,
            Method::Exponential => &self.neg_q,
            Method::Binomial => {
                return Err(Error::InvalidConfig {
                    reason: "the binomial route needs no sieve; call c_binomial".into(),
                })
            }
        };
        let start = self.window_start(k);
        let from = self.ns.partition_point(|&n| n < start as f64);
        let kf = k as f64;
        let mut acc = KahanSum::new();
        if k == 0 {
            for &a in &self.mu_over_na[from..] {
                acc.add(a);
            }
        } else {
            for i in from..self.ns.len() {
                acc.add(self.mu_over_na[i] * (kf * weights[i]).exp());
            }
        }
        Ok(CoefficientResult {
            value: acc.value(),
            tail_bound: self.tail_bound,
            terms_used: (self.limit + 1).saturating_sub(start),
            method,
        })
    }
}

fn tail_bound(params: &ModelParams, limit: u64) -> f64 {
    if params.alpha > 1.0 {
        (limit as f64).powf(1.0 - params.alpha) / (params.alpha - 1.0)
    } else {
        f64::INFINITY
    }
}

/// c_k by the direct Möbius sum with weight (1 - n^{-beta})^k.
pub fn c_direct(params: &ModelParams, k: u64, table: &MobiusTable) -> Result<CoefficientResult> {
    SeriesKernel::new(params, table)?.coefficient(Method::Direct, k)
}

/// c_k by the exponential surrogate with weight e^{-k/n^beta}.
pub fn c_exponential(
    params: &ModelParams,
    k: u64,
    table: &MobiusTable,
) -> Result<CoefficientResult> {
    SeriesKernel::new(params, table)?.coefficient(Method::Exponential, k)
}

/// c_k = sum_{j=0}^{k} (-1)^j C(k,j) / zeta(alpha + beta j), exact binomials,
/// k <= 40. At alpha = 1 the j = 0 term is taken as 1/zeta(1) = 0 (the pole
/// limit).
pub fn c_binomial(params: &ModelParams, k: u64) -> Result<CoefficientResult> {
    if k > BINOMIAL_MAX_K {
        return Err(Error::BinomialCeiling {
            k,
            max: BINOMIAL_MAX_K,
        });
    }
    let mut acc = KahanSum::new();
    let mut binom = 1.0f64;
    let mut sign = 1.0;
    for j in 0..=k {
        if j > 0 {
            binom *= (k - j + 1) as f64 / j as f64;
            sign = -sign;
        }
        let x = params.alpha() + params.beta() * j as f64;
        let inv_zeta = if x == 1.0 { 0.0 } else { 1.0 / zeta_real(x)? };
        acc.add(sign * binom * inv_zeta);
    }
    Ok(CoefficientResult {
        value: acc.value(),
        tail_bound: 0.0,
        terms_used: k + 1,
        method: Method::Binomial,
    })
}

/// Critical function psi = c_k * k^{(alpha - rho)/beta}; zero at k = 0.
pub fn psi(params: &ModelParams, k: u64, c_k: f64) -> f64 {
    if k == 0 {
        0.0
    } else {
        c_k * (k as f64).powf(params.decay_exponent())
    }
}

/// |c_exponential(k) - sum_p c_p Pois(p; k)| where the mixture runs over
/// p <= k + 20 sqrt(k) + 50 (Poisson mass beyond is < 1e-15). Consistency
/// metric only; small values certify the exponential surrogate.
pub fn poisson_mixture_check(
    params: &ModelParams,
    k: u64,
    table: &MobiusTable,
) -> Result<f64> {
    if k > MIXTURE_MAX_K {
        return Err(Error::MixtureCeiling {
            k,
            max: MIXTURE_MAX_K,
        });
    }
    let kernel = SeriesKernel::new(params, table)?;
    let lhs = kernel.coefficient(Method::Exponential, k)?.value;
    let kf = k as f64;
    let p_max = k + (20.0 * kf.sqrt()).ceil() as u64 + 50;
    let mut weight = (-kf).exp();
    let mut acc = KahanSum::new();
    for p in 0..=p_max {
        let c_p = if p <= BINOMIAL_MAX_K {
            c_binomial(params, p)?.value
        } else {
            kernel.coefficient(Method::Direct, p)?.value
        };
        acc.add(c_p * weight);
        weight *= kf / (p + 1) as f64;
    }
    Ok((lhs - acc.value()).abs())
}

/// F(x) = sum_{k>=1} (-1)^{k+1} x^k / ((k-1)! zeta(2k)), summed until the
/// term drops below 1e-16 of the partial sum. Entire; intended for x >= 0.
pub fn riesz_function(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let mut acc = KahanSum::new();
    let mut term = x; // x^k / (k-1)!
    let mut sign = 1.0;
    let max_k = (5.0 * x) as u64 + 60;
    for k in 1..=max_k {
        acc.add(sign * term / zeta_real(2.0 * k as f64).expect("2k >= 2"));
        if term < 1e-16 * acc.value().abs() {
            break;
        }
        term *= x / k as f64;
        sign = -sign;
    }
    acc.value()
}
