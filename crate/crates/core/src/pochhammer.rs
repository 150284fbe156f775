//! Pochhammer polynomials P_k(z) = prod_{r=1}^{k} (1 - z/r) at complex
//! arguments, their reciprocal binomial representation, and the large-k
//! gamma surrogate.
//!
//! The product is evaluated in log-modulus plus accumulated phase: at
//! k = 1e9 the raw product under/overflows binary64 for generic z, while
//! the log form stays finite. Factor phases shrink like Im(z)/r, so the
//! accumulated phase stays O(|Im z| ln k) and loses no precision.

use num_complex::Complex64;

use crate::coefficients::ModelParams;
use crate::error::{Error, Result};
use crate::special::gamma_complex;

/// Ceiling for the binomial reciprocal form; beyond it C(k,j) cancellation
/// destroys binary64 accuracy.
pub const RECIPROCAL_MAX_K: u64 = 40;

/// P_k(z) = prod_{r=1}^{k} (1 - z/r).
pub fn pochhammer_base(z: Complex64, k: u64) -> Complex64 {
    if z.im == 0.0 && z.re > 0.0 && z.re.fract() == 0.0 && z.re <= k as f64 {
        return Complex64::new(0.0, 0.0);
    }
    let mut log_mod = 0.0f64;
    let mut phase = 0.0f64;
    for r in 1..=k {
        let f = Complex64::new(1.0, 0.0) - z / (r as f64);
        let n = f.norm();
        if n == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        log_mod += n.ln();
        phase += f.arg();
    }
    Complex64::from_polar(log_mod.exp(), phase)
}

/// P_k at the model's reduced argument z = (s - alpha)/beta + 1.
pub fn pochhammer_model(s: Complex64, params: &ModelParams, k: u64) -> Complex64 {
    pochhammer_base(params.reduced_argument(s), k)
}

/// Reciprocal representation 1/P_k(z) = sum_{j=1}^{k} (-1)^j C(k,j) j/(z - j),
/// valid for k in 1..=40. Serves as an independent oracle for the product form.
pub fn reciprocal_bd(z: Complex64, k: u64) -> Result<Complex64> {
    if k == 0 || k > RECIPROCAL_MAX_K {
        return Err(Error::BinomialCeiling {
            k,
            max: RECIPROCAL_MAX_K,
        });
    }
    if z.im == 0.0 && z.re.fract() == 0.0 && z.re >= 1.0 && z.re <= k as f64 {
        return Err(Error::ReciprocalPole { z });
    }
    let mut binom = 1.0f64; // C(k, j), exact in f64 for k <= 40
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sign = -1.0;
    for j in 1..=k {
        let jf = j as f64;
        binom *= (k - j + 1) as f64 / jf;
        sum += sign * binom * jf / (z - jf);
        sign = -sign;
    }
    Ok(sum)
}

/// Large-k surrogate k^{-z} / Gamma(1 - z) from the limit P_k(z) k^z -> 1/Gamma(1-z).
pub fn pochhammer_asymptotic(z: Complex64, k: u64) -> Result<Complex64> {
    let g = gamma_complex(Complex64::new(1.0, 0.0) - z)?;
    let kf = k as f64;
    Ok((-z * kf.ln()).exp() / g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Plain product, oracle for the log-domain path (safe only for small k).
    fn naive_product(z: Complex64, k: u64) -> Complex64 {
        (1..=k).fold(c(1.0, 0.0), |acc, r| acc * (c(1.0, 0.0) - z / (r as f64)))
    }

    #[test]
    fn base_special_values() {
        assert_eq!(pochhammer_base(c(0.0, 0.0), 0), c(1.0, 0.0));
        assert_eq!(pochhammer_base(c(0.0, 0.0), 1_000_000), c(1.0, 0.0));
        assert_eq!(pochhammer_base(c(1.0, 0.0), 1), c(0.0, 0.0));
        assert_eq!(pochhammer_base(c(1.0, 0.0), 7), c(0.0, 0.0));
        assert_eq!(pochhammer_base(c(5.0, 0.0), 5), c(0.0, 0.0));
        // k = 1, z = 2 -> 1 - 2/1 = -1
        assert!((pochhammer_base(c(2.0, 0.0), 1) - c(-1.0, 0.0)).norm() < 1e-15);
        // z = 6 with k = 5 does not hit a factor
        assert!(pochhammer_base(c(6.0, 0.0), 5).norm() > 0.0);
    }

    #[test]
    fn log_domain_matches_naive_product() {
        let zs = [c(0.3, 0.7), c(-2.5, 1.5), c(0.25, 7.067), c(3.3, -0.2)];
        for z in zs {
            for k in [1u64, 10, 100, 1000] {
                let a = pochhammer_base(z, k);
                let b = naive_product(z, k);
                assert!(
                    (a - b).norm() <= 1e-12 * b.norm(),
                    "z={z} k={k}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn model_argument_reduction() {
        let params = ModelParams::new(2.0, 2.0).unwrap();
        // s = alpha - beta => z = 0 => P_k = 1
        let s = c(0.0, 0.0);
        assert_eq!(pochhammer_model(s, &params, 12), c(1.0, 0.0));
        // s = alpha + beta (j - 1) hits the factor r = j
        for j in 1..=4u64 {
            let s = c(2.0 + 2.0 * (j as f64 - 1.0), 0.0);
            assert_eq!(pochhammer_model(s, &params, 10), c(0.0, 0.0));
        }
    }

    #[test]
    fn reciprocal_hand_case() {
        // k = 1, z = 3: sum = -C(1,1) * 1/(3-1) = -1/2; P_1(3) = -2; product 1
        let r = reciprocal_bd(c(3.0, 0.0), 1).unwrap();
        assert!((r - c(-0.5, 0.0)).norm() < 1e-15);
        let p = pochhammer_base(c(3.0, 0.0), 1);
        assert!((r * p - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn reciprocal_identity_spot_checks() {
        let cases = [(c(0.25, 7.067), 5u64, 1e-10), (c(0.75, 0.0), 20, 1e-8)];
        for (z, k, tol) in cases {
            let product = pochhammer_base(z, k) * reciprocal_bd(z, k).unwrap();
            assert!(
                (product - c(1.0, 0.0)).norm() < tol,
                "z={z} k={k}: product {product}"
            );
        }
    }

    #[test]
    fn reciprocal_errors() {
        assert!(matches!(
            reciprocal_bd(c(0.5, 0.0), 41),
            Err(Error::BinomialCeiling { .. })
        ));
        assert!(matches!(
            reciprocal_bd(c(3.0, 0.0), 5),
            Err(Error::ReciprocalPole { .. })
        ));
        // integers outside 1..=k are not poles
        assert!(reciprocal_bd(c(9.0, 0.0), 5).is_ok());
        assert!(reciprocal_bd(c(0.0, 0.0), 5).is_ok());
    }

    #[test]
    fn asymptotic_limit_trend() {
        // gap |P_k(z) k^z * Gamma(1-z) - 1| must shrink monotonically in k
        for z in [c(0.25, -7.067), c(0.5, 0.0)] {
            let mut last = f64::INFINITY;
            for exp in 2..=6u32 {
                let k = 10u64.pow(exp);
                let surrogate = pochhammer_asymptotic(z, k).unwrap();
                let exact = pochhammer_base(z, k);
                let gap = (exact - surrogate).norm() / surrogate.norm();
                assert!(gap < last, "z={z}: gap {gap} at k=1e{exp} not below {last}");
                last = gap;
            }
        }
    }

    #[test]
    fn asymptotic_gap_magnitudes() {
        let z = c(0.25, -7.067);
        let gap = (pochhammer_base(z, 1_000_000) - pochhammer_asymptotic(z, 1_000_000).unwrap())
            .norm()
            / pochhammer_asymptotic(z, 1_000_000).unwrap().norm();
        assert!(gap < 0.02, "gap {gap}");
        let z = c(0.5, 0.0);
        let gap = (pochhammer_base(z, 10_000) - pochhammer_asymptotic(z, 10_000).unwrap()).norm()
            / pochhammer_asymptotic(z, 10_000).unwrap().norm();
        assert!(gap < 0.01, "gap {gap}");
    }

    #[test]
    fn asymptotic_matches_at_origin() {
        assert!((pochhammer_asymptotic(c(0.0, 0.0), 5).unwrap() - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn asymptotic_pole_error() {
        assert!(matches!(
            pochhammer_asymptotic(c(1.0, 0.0), 10),
            Err(Error::GammaPole { .. })
        ));
    }

    #[test]
    fn decay_boundedness_in_the_strip() {
        // |P_k(z)| k^{Re z} stays bounded over decades for moderate |Im z|
        for z in [c(0.3, 0.7), c(0.8, -2.0), c(0.5, 1.3), c(0.05, 0.4)] {
            let seq: Vec<f64> = (1..=6u32)
                .map(|e| {
                    let k = 10u64.pow(e);
                    pochhammer_base(z, k).norm() * (k as f64).powf(z.re)
                })
                .collect();
            let max = seq.iter().cloned().fold(f64::MIN, f64::max);
            let min = seq.iter().cloned().fold(f64::MAX, f64::min);
            assert!(max / min < 10.0, "z={z}: ratio {} seq {seq:?}", max / min);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn reciprocal_identity(re in -10.0f64..10.0, im in -10.0f64..10.0, k in 1u64..=20) {
                let z = c(re, im);
                // keep away from the poles of the reciprocal form
                prop_assume!(im.abs() > 1e-3);
                let product = pochhammer_base(z, k) * reciprocal_bd(z, k).unwrap();
                prop_assert!(
                    (product - c(1.0, 0.0)).norm() < 1e-8,
                    "z={} k={}: {}", z, k, product
                );
            }

            #[test]
            fn conjugation(re in -5.0f64..5.0, im in 0.01f64..5.0, k in 0u64..=500) {
                let z = c(re, im);
                let a = pochhammer_base(z.conj(), k);
                let b = pochhammer_base(z, k).conj();
                prop_assert!((a - b).norm() <= 1e-10 * b.norm().max(1e-300));
            }
        }
    }
}
