//! Wave scans over k-grids, oscillation feature extraction, and beta sweeps.
//!
//! Samples are computed independently per grid point (parallel map over a
//! shared kernel) and collected in grid order, so output is deterministic
//! regardless of worker count. CSV rows carry 17 significant digits.

use rayon::prelude::*;
use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use crate::coefficients::{c_binomial, psi, Method, ModelParams, SeriesKernel, BINOMIAL_MAX_K};
use crate::error::{Error, Result};
use crate::mobius::MobiusTable;
use crate::special::ZeroTable;
use crate::wave;

/// Largest k a scan may request.
pub const MAX_SCAN_K: u64 = 10_000_000_000;

/// Grid shape: log-spaced points or the fixed-stride compatibility mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSpec {
    LogPoints(u32),
    Stride(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Full scan specification.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub params: ModelParams,
    pub k_min: u64,
    pub k_max: u64,
    pub grid: GridSpec,
    pub sieve_limit: u64,
    pub method: Method,
    pub zeros_used: usize,
    pub output_path: Option<PathBuf>,
    pub format: OutputFormat,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Err(Error::InvalidConfig { reason });
        if self.k_min < 1 {
            return bad(format!("k_min {} must be at least 1", self.k_min));
        }
        if self.k_max > MAX_SCAN_K {
            return bad(format!("k_max {} exceeds the ceiling {MAX_SCAN_K}", self.k_max));
        }
        if self.k_min > self.k_max {
            return bad(format!("k_min {} exceeds k_max {}", self.k_min, self.k_max));
        }
        match self.grid {
            GridSpec::LogPoints(p) if p < 2 && self.k_min != self.k_max => {
                return bad(format!("log grid needs at least 2 points, got {p}"));
            }
            GridSpec::Stride(0) => return bad("stride must be at least 1".into()),
            _ => {}
        }
        if self.zeros_used == 0 {
            return bad("zeros_used must be at least 1".into());
        }
        if self.method == Method::Binomial && self.k_max > BINOMIAL_MAX_K {
            return bad(format!(
                "binomial method is capped at k = {BINOMIAL_MAX_K}; scan reaches {}",
                self.k_max
            ));
        }
        Ok(())
    }
}

/// One scan row.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WaveSample {
    pub k: u64,
    pub x: f64,
    pub c_k: f64,
    pub psi: f64,
    /// NaN for k < 2, where the asymptotic wave is undefined.
    pub psi_bar: f64,
    pub tail_bound: f64,
}

/// Materialize the k grid: sorted, deduplicated.
pub fn k_grid(config: &ScanConfig) -> Vec<u64> {
    match config.grid {
        GridSpec::LogPoints(points) => {
            if config.k_min == config.k_max {
                return vec![config.k_min];
            }
            let lo = (config.k_min as f64).ln();
            let hi = (config.k_max as f64).ln();
            let n = points.max(2) as usize;
            let mut ks: Vec<u64> = (0..n)
                .map(|i| {
                    let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
                    (x.exp().round() as u64).clamp(config.k_min, config.k_max)
                })
                .collect();
            ks.dedup();
            ks
        }
        GridSpec::Stride(stride) => {
            let mut ks = Vec::new();
            let mut k = config.k_min;
            while k <= config.k_max {
                ks.push(k);
                match k.checked_add(stride) {
                    Some(next) => k = next,
                    None => break,
                }
            }
            ks
        }
    }
}

fn sample_at(
    kernel: &SeriesKernel,
    params: &ModelParams,
    method: Method,
    zeros: &ZeroTable,
    k: u64,
) -> Result<WaveSample> {
    let coeff = match method {
        Method::Binomial => c_binomial(params, k)?,
        other => kernel.coefficient(other, k)?,
    };
    let psi_bar = if k >= 2 {
        wave::psi_bar(params, k, zeros)?
    } else {
        f64::NAN
    };
    Ok(WaveSample {
        k,
        x: (k as f64).ln(),
        c_k: coeff.value,
        psi: psi(params, k, coeff.value),
        psi_bar,
        tail_bound: coeff.tail_bound,
    })
}

/// Run one scan. Rows come back sorted by k; when `output_path` is set the
/// samples are also written there in the configured format.
pub fn run_scan(
    config: &ScanConfig,
    table: &MobiusTable,
    zeros: &ZeroTable,
) -> Result<Vec<WaveSample>> {
    config.validate()?;
    if table.limit() != config.sieve_limit {
        return Err(Error::InvalidConfig {
            reason: format!(
                "table sieved to {} but the scan asks for {}",
                table.limit(),
                config.sieve_limit
            ),
        });
    }
    let zeros = zeros.prefix(config.zeros_used)?;
    let kernel = SeriesKernel::new(&config.params, table)?;
    let grid = k_grid(config);
    let samples = grid
        .par_iter()
        .map(|&k| sample_at(&kernel, &config.params, config.method, &zeros, k))
        .collect::<Result<Vec<_>>>()?;
    if let Some(path) = &config.output_path {
        write_samples(path, &samples, config.format)?;
    }
    Ok(samples)
}

/// Oscillation features of a scanned wave beyond `onset_x`.
#[derive(Clone, Debug, Default)]
pub struct OscillationFeatures {
    /// Interpolated x positions of sign changes.
    pub zero_crossings: Vec<f64>,
    /// (x, psi) at strict local extrema.
    pub extrema: Vec<(f64, f64)>,
    /// Mean gap between successive same-direction crossings; needs at least
    /// 3 crossings.
    pub measured_period_x: Option<f64>,
    /// Mean |psi| over the extrema.
    pub measured_amplitude: Option<f64>,
    pub crossing_count: usize,
}

/// Default measurement onset: x of the global minimum plus one predicted
/// period, which keeps the incoming dip out of the amplitude statistics.
pub fn default_onset_x(samples: &[WaveSample], period_x: f64) -> f64 {
    samples
        .iter()
        .min_by(|a, b| a.psi.total_cmp(&b.psi))
        .map(|s| s.x + period_x)
        .unwrap_or(0.0)
}

/// Extract crossings, extrema, period, and amplitude from a scan.
pub fn extract_features(samples: &[WaveSample], onset_x: f64) -> OscillationFeatures {
    let mut features = OscillationFeatures::default();
    let mut ups = Vec::new();
    let mut downs = Vec::new();
    for w in samples.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a.x < onset_x || !(a.psi * b.psi < 0.0) {
            continue;
        }
        let xc = a.x + (b.x - a.x) * (-a.psi) / (b.psi - a.psi);
        features.zero_crossings.push(xc);
        if b.psi > 0.0 {
            ups.push(xc);
        } else {
            downs.push(xc);
        }
    }
    features.crossing_count = features.zero_crossings.len();

    for w in samples.windows(3) {
        let (a, b, c) = (&w[0], &w[1], &w[2]);
        if b.x <= onset_x {
            continue;
        }
        let max = b.psi > a.psi && b.psi > c.psi;
        let min = b.psi < a.psi && b.psi < c.psi;
        if max || min {
            features.extrema.push((b.x, b.psi));
        }
    }

    if features.crossing_count >= 3 {
        let gaps: Vec<f64> = ups
            .windows(2)
            .chain(downs.windows(2))
            .map(|p| p[1] - p[0])
            .collect();
        if !gaps.is_empty() {
            features.measured_period_x = Some(gaps.iter().sum::<f64>() / gaps.len() as f64);
        }
    }
    if !features.extrema.is_empty() {
        features.measured_amplitude = Some(
            features.extrema.iter().map(|(_, p)| p.abs()).sum::<f64>()
                / features.extrema.len() as f64,
        );
    }
    features
}

/// One beta slice of a sweep.
#[derive(Clone, Debug)]
pub struct BetaScan {
    pub beta: f64,
    pub samples: Vec<WaveSample>,
}

/// Sweep specification: one alpha, several betas, a shared grid.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub alpha: f64,
    pub rho: f64,
    pub betas: Vec<f64>,
    pub k_min: u64,
    pub k_max: u64,
    pub grid: GridSpec,
    pub sieve_limit: u64,
    pub method: Method,
    pub zeros_used: usize,
    pub output_path: Option<PathBuf>,
}

fn params_for_alpha(alpha: f64, beta: f64, rho: f64) -> Result<ModelParams> {
    if alpha > 1.0 {
        ModelParams::with_rho(alpha, beta, rho)
    } else {
        ModelParams::exploratory_with_rho(alpha, beta, rho)
    }
}

/// One scan per beta on the shared grid. The combined CSV (beta column
/// first) carries the raw c_k series alongside psi for cross-beta
/// comparison.
pub fn beta_sweep(
    config: &SweepConfig,
    table: &MobiusTable,
    zeros: &ZeroTable,
) -> Result<Vec<BetaScan>> {
    if config.betas.is_empty() {
        return Err(Error::InvalidConfig {
            reason: "sweep needs at least one beta".into(),
        });
    }
    let mut scans = Vec::with_capacity(config.betas.len());
    for &beta in &config.betas {
        let scan_config = ScanConfig {
            params: params_for_alpha(config.alpha, beta, config.rho)?,
            k_min: config.k_min,
            k_max: config.k_max,
            grid: config.grid,
            sieve_limit: config.sieve_limit,
            method: config.method,
            zeros_used: config.zeros_used,
            output_path: None,
            format: OutputFormat::Csv,
        };
        scans.push(BetaScan {
            beta,
            samples: run_scan(&scan_config, table, zeros)?,
        });
    }
    if let Some(path) = &config.output_path {
        let mut file = fs::File::create(path)?;
        file.write_all(render_sweep_csv(&scans).as_bytes())?;
    }
    Ok(scans)
}

const CSV_HEADER: &str = "k,x,c_k,psi,psi_bar,tail_bound";

fn push_row(out: &mut String, s: &WaveSample) {
    use std::fmt::Write as _;
    let _ = writeln!(
        out,
        "{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
        s.k, s.x, s.c_k, s.psi, s.psi_bar, s.tail_bound
    );
}

/// CSV text with the exact column order `k,x,c_k,psi,psi_bar,tail_bound`.
pub fn render_csv(samples: &[WaveSample]) -> String {
    let mut out = String::with_capacity(64 * (samples.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in samples {
        push_row(&mut out, s);
    }
    out
}

/// Combined sweep CSV with a leading beta column.
pub fn render_sweep_csv(scans: &[BetaScan]) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "beta,{CSV_HEADER}");
    for scan in scans {
        for s in &scan.samples {
            let _ = write!(out, "{:.16e},", scan.beta);
            push_row(&mut out, s);
        }
    }
    out
}

/// Write samples as CSV or a JSON array.
pub fn write_samples(path: &PathBuf, samples: &[WaveSample], format: OutputFormat) -> Result<()> {
    let mut file = fs::File::create(path)?;
    match format {
        OutputFormat::Csv => file.write_all(render_csv(samples).as_bytes())?,
        OutputFormat::Json => {
            serde_json::to_writer(&mut file, samples).map_err(std::io::Error::other)?;
            file.write_all(b"\n")?;
        }
    }
    Ok(())
}
