use num_complex::Complex64;
use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "sieve limit {limit} outside supported range 1..={ceiling} \
         (storage is ~1 byte per entry, so {limit} entries need ~{mib} MiB)"
    )]
    SieveLimit { limit: u64, ceiling: u64, mib: u64 },

    #[error("n = {n} outside sieved range 1..={limit}")]
    OutOfRange { n: u64, limit: u64 },

    #[error("zeta on the real axis requires x > 1 (pole at x = 1), got x = {x}")]
    RealZetaDomain { x: f64 },

    #[error("zeta evaluation unsupported at s = {s}: requires Re(s) > 0 and |Im(s)| <= 300")]
    UnsupportedRegion { s: Complex64 },

    #[error("s = {s} is within 1e-8 of the zeta pole at s = 1")]
    ZetaPole { s: Complex64 },

    #[error("gamma pole: argument within 1e-9 of the non-positive integer {nearest}")]
    GammaPole { nearest: i64 },

    #[error("zero refinement failed for seed #{index} (t ~ {seed}): no sign structure in bracket")]
    ZeroRefinement { index: usize, seed: f64 },

    #[error("zero count {count} outside supported range 1..={max}")]
    ZeroCount { count: usize, max: usize },

    #[error("k = {k} exceeds the binomial-cancellation ceiling {max}; use c_direct for large k")]
    BinomialCeiling { k: u64, max: u64 },

    #[error("Poisson mixture check supports k <= {max}, got k = {k}")]
    MixtureCeiling { k: u64, max: u64 },

    #[error("reciprocal representation has a pole at z = {z} (integer j in 1..=k)")]
    ReciprocalPole { z: Complex64 },

    #[error("invalid model parameters: {reason}")]
    InvalidModel { reason: String },

    #[error("gamma pole in the zero sum at zero #{index} (ordinate {ordinate})")]
    WavePole { index: usize, ordinate: f64 },

    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
