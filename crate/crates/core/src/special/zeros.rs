//! Nontrivial zeros of zeta on the critical line.
//!
//! Ordinates are seeded from an embedded coarse list (3 decimals) and refined
//! in-process by bisection on the sign of d|zeta|^2/dt, which changes sign at
//! the modulus minimum. zeta' is evaluated once per zero and cached.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::{zeta_complex, zeta_prime};

/// Coarse ordinates of the first 30 zeros, rounded to 3 decimals.
pub const ZERO_SEEDS: [f64; 30] = [
    14.135, 21.022, 25.011, 30.425, 32.935, 37.586, 40.919, 43.327, 48.005, 49.774, 52.970,
    56.446, 59.347, 60.832, 65.113, 67.080, 69.546, 72.067, 75.705, 77.145, 79.337, 82.910,
    84.735, 87.425, 88.809, 92.492, 94.651, 95.871, 98.831, 101.318,
];

/// One refined zero 1/2 + i t together with zeta'(1/2 + i t).
#[derive(Clone, Copy, Debug)]
pub struct ZeroRecord {
    pub ordinate: f64,
    pub zeta_prime: Complex64,
}

/// Refined zeros in ascending ordinate order. Immutable once built.
#[derive(Clone, Debug)]
pub struct ZeroTable {
    records: Vec<ZeroRecord>,
}

impl ZeroTable {
    pub fn records(&self) -> &[ZeroRecord] {
        &self.records
    }

    pub fn count(&self) -> usize {
        self.records.len()
    }

    pub fn first(&self) -> &ZeroRecord {
        &self.records[0]
    }

    /// Table holding only the first `count` zeros.
    pub fn prefix(&self, count: usize) -> Result<ZeroTable> {
        if count == 0 || count > self.records.len() {
            return Err(Error::ZeroCount {
                count,
                max: self.records.len(),
            });
        }
        Ok(ZeroTable {
            records: self.records[..count].to_vec(),
        })
    }
}

fn on_line(t: f64) -> Complex64 {
    Complex64::new(0.5, t)
}

/// d|zeta(1/2+it)|^2 / dt, the signed slope of the modulus along the line.
fn modulus_slope(t: f64) -> Result<f64> {
    let z = zeta_complex(on_line(t))?;
    let zp = zeta_prime(on_line(t))?;
    Ok(2.0 * (z.conj() * Complex64::i() * zp).re)
}

const BRACKET: f64 = 0.05;
const MODULUS_TOLERANCE: f64 = 1e-8;
const SIMPLE_ZERO_FLOOR: f64 = 1e-3;

fn refine(index: usize, seed: f64) -> Result<ZeroRecord> {
    let fail = || Error::ZeroRefinement { index, seed };
    let mut lo = seed - BRACKET;
    let mut hi = seed + BRACKET;
    let slope_lo = modulus_slope(lo)?;
    let slope_hi = modulus_slope(hi)?;
    if !(slope_lo < 0.0 && slope_hi > 0.0) {
        return Err(fail());
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if modulus_slope(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    if zeta_complex(on_line(t))?.norm() >= MODULUS_TOLERANCE {
        return Err(fail());
    }
    let zp = zeta_prime(on_line(t))?;
    if zp.norm() <= SIMPLE_ZERO_FLOOR {
        return Err(fail());
    }
    Ok(ZeroRecord {
        ordinate: t,
        zeta_prime: zp,
    })
}

/// Refine the first `count` zeros (1..=30).
pub fn build_zero_table(count: usize) -> Result<ZeroTable> {
    if count == 0 || count > ZERO_SEEDS.len() {
        return Err(Error::ZeroCount {
            count,
            max: ZERO_SEEDS.len(),
        });
    }
    let records = ZERO_SEEDS[..count]
        .iter()
        .enumerate()
        .map(|(i, &seed)| refine(i, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZeroTable { records })
}
