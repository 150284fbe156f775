//! Riemann zeta on the real axis and in the critical strip.
//!
//! Real axis: Euler-Maclaurin with a short leading sum; absolute error is
//! at machine level for every x > 1.
//!
//! Strip: the alternating series eta(s) = sum (-1)^{n-1} n^{-s} accelerated
//! with Chebyshev-polynomial weights, then zeta(s) = eta(s) / (1 - 2^{1-s}).
//! The term count grows like |Im s| to beat the e^{pi |t| / 2} factor in the
//! acceleration error bound, which caps the supported height.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// B_{2j} / (2j)! for j = 1..=14.
const BERNOULLI_OVER_FACTORIAL: [f64; 14] = [
    0.083333333333333333333,
    -0.0013888888888888888889,
    0.000033068783068783068783,
    -8.2671957671957671958e-7,
    2.0876756987868098979e-8,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.174868698558061873e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
];

const EM_CUTOFF: u32 = 24;

/// zeta(x) for real x > 1.
pub fn zeta_real(x: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::RealZetaDomain { x });
    }
    let n = EM_CUTOFF as f64;
    let mut acc = KahanSum::new();
    for m in 1..=EM_CUTOFF {
        acc.add((m as f64).powf(-x));
    }
    acc.add(n.powf(1.0 - x) / (x - 1.0));
    acc.add(-0.5 * n.powf(-x));

    // correction terms B_{2j}/(2j)! * x(x+1)...(x+2j-2) * n^{-x-2j+1}
    let mut rising = x;
    let mut npow = n.powf(-x - 1.0);
    let inv_n2 = 1.0 / (n * n);
    for (j, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = b * rising * npow;
        if term.abs() < 1e-18 * acc.value().abs() {
            break;
        }
        acc.add(term);
        let r = x + (2 * j) as f64;
        rising *= (r + 1.0) * (r + 2.0);
        npow *= inv_n2;
    }
    Ok(acc.value())
}

const LN_ACCEL: f64 = 1.7627471740390860505; // ln(3 + sqrt 8)
const MAX_ETA_TERMS: usize = 380;
const POLE_RADIUS: f64 = 1e-8;

fn eta_terms(t_abs: f64, digits: f64) -> usize {
    // truncation ~ (1 + 2t) e^{pi t / 2} / (3 + sqrt 8)^n, plus slack for the
    // 1/(1 - 2^{1-s}) prefactor near its zeros
    let needed =
        (digits * std::f64::consts::LN_10 + std::f64::consts::FRAC_PI_2 * t_abs + (1.0 + 2.0 * t_abs).ln() + 19.0)
            / LN_ACCEL;
    (needed.ceil() as usize + 8).max(24)
}

/// Chebyshev acceleration weights d_0..=d_n.
fn acceleration_weights(n: usize) -> Vec<f64> {
    let mut d = Vec::with_capacity(n + 1);
    let nf = n as f64;
    let mut term = 1.0 / nf; // (n-1)! / n! * 4^0 / 0!
    let mut dk = nf * term;
    d.push(dk);
    for i in 1..=n {
        let i_f = i as f64;
        term *= 4.0 * (nf + i_f - 1.0) * (nf - i_f + 1.0) / ((2.0 * i_f) * (2.0 * i_f - 1.0));
        dk += nf * term;
        d.push(dk);
    }
    d
}

struct EtaSums {
    eta: Complex64,
    eta_prime: Option<Complex64>,
}

fn eta_accelerated(s: Complex64, with_derivative: bool) -> Result<EtaSums> {
    let n = eta_terms(s.im.abs(), 14.0);
    if n > MAX_ETA_TERMS {
        return Err(Error::UnsupportedRegion { s });
    }
    let d = acceleration_weights(n);
    let dn = d[n];
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sum_d = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for (k, dk) in d.iter().take(n).enumerate() {
        let ln_k1 = ((k + 1) as f64).ln();
        let pw = (-s * ln_k1).exp(); // (k+1)^{-s}
        let w = sign * (dk - dn);
        sum += w * pw;
        if with_derivative {
            sum_d += w * (-ln_k1) * pw;
        }
        sign = -sign;
    }
    Ok(EtaSums {
        eta: -sum / dn,
        eta_prime: with_derivative.then(|| -sum_d / dn),
    })
}

fn check_domain(s: Complex64) -> Result<()> {
    if !(s.re > 0.0) {
        return Err(Error::UnsupportedRegion { s });
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < POLE_RADIUS {
        return Err(Error::ZetaPole { s });
    }
    Ok(())
}

#[inline]
fn two_pow(e: Complex64) -> Complex64 {
    (e * std::f64::consts::LN_2).exp()
}

/// zeta(s) for Re(s) > 0, s != 1.
pub fn zeta_complex(s: Complex64) -> Result<Complex64> {
    check_domain(s)?;
    let sums = eta_accelerated(s, false)?;
    let denom = Complex64::new(1.0, 0.0) - two_pow(Complex64::new(1.0, 0.0) - s);
    Ok(sums.eta / denom)
}

/// zeta'(s) on the same domain, by term-wise differentiation of the
/// accelerated series plus the prefactor derivative.
pub fn zeta_prime(s: Complex64) -> Result<Complex64> {
    check_domain(s)?;
    let sums = eta_accelerated(s, true)?;
    let eta = sums.eta;
    let eta_p = sums.eta_prime.expect("derivative requested");
    let p = two_pow(Complex64::new(1.0, 0.0) - s); // 2^{1-s}
    let denom = Complex64::new(1.0, 0.0) - p;
    Ok(eta_p / denom - eta * (std::f64::consts::LN_2 * p) / (denom * denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_axis_closed_forms() {
        assert!((zeta_real(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_real(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn real_axis_reference_values() {
        // mpmath, 18 digits
        let cases = [
            (1.001, 1000.57728847601163),
            (1.5, 2.61237534868548834),
            (3.5, 1.12673386731705665),
            (10.0, 1.00099457512781809),
            (40.0, 1.00000000000090949),
        ];
        for (x, want) in cases {
            let got = zeta_real(x).unwrap();
            assert!(
                (got - want).abs() < 1e-12 * want.abs(),
                "zeta({x}): {got} vs {want}"
            );
        }
        assert_eq!(zeta_real(100.0).unwrap(), 1.0 + 2f64.powi(-100));
    }

    #[test]
    fn real_axis_domain_errors() {
        assert!(zeta_real(1.0).is_err());
        assert!(zeta_real(0.3).is_err());
        assert!(zeta_real(f64::NAN).is_err());
    }

    #[test]
    fn paper_reciprocal_values() {
        let z35 = zeta_real(3.5).unwrap();
        assert!((1.0 / z35 - 1.0).abs() - 0.11247897 < 1e-8);
        assert!(((1.0 / z35 - 1.0).abs() - 0.112478972180743406).abs() < 1e-12);
    }

    #[test]
    fn strip_reference_values() {
        // mpmath, 17 digits
        let cases = [
            (c(2.0, 0.0), c(1.6449340668482264, 0.0)),
            (c(0.5, 14.0), c(0.022241142609993589, -0.10325812326645006)),
            (c(2.0, 3.0), c(0.79802198514627572, -0.1137443080529385)),
            (c(0.25, 30.0), c(-0.58648278883921795, -0.61114963107644281)),
            (c(1.5, -7.2), c(1.0512367349293619, -0.22828736612436705)),
            (c(0.5, 100.0), c(2.6926198856813241, -0.020386029602598162)),
        ];
        for (s, want) in cases {
            let got = zeta_complex(s).unwrap();
            assert!(
                (got - want).norm() < 1e-10 * want.norm(),
                "zeta({s}): {got} vs {want}"
            );
        }
    }

    #[test]
    fn vanishes_at_first_zero() {
        let s = c(0.5, 14.134725141);
        assert!(zeta_complex(s).unwrap().norm() < 1e-6);
    }

    #[test]
    fn half_line_reciprocal_bound_value() {
        let z = zeta_complex(c(0.5, 0.0)).unwrap();
        let v = (z.finv() - Complex64::new(1.0, 0.0)).norm();
        assert!((v - 1.6847652360899365).abs() < 1e-9, "{v}");
    }

    #[test]
    fn agrees_with_real_axis() {
        let mut x = 1.02;
        while x <= 40.0 {
            let a = zeta_real(x).unwrap();
            let b = zeta_complex(c(x, 0.0)).unwrap();
            assert!(
                (b - c(a, 0.0)).norm() < 1e-10 * a.abs(),
                "mismatch at x = {x}: {a} vs {b}"
            );
            x += 0.83;
        }
    }

    #[test]
    fn strip_domain_errors() {
        assert!(matches!(
            zeta_complex(c(-0.5, 3.0)),
            Err(Error::UnsupportedRegion { .. })
        ));
        assert!(matches!(
            zeta_complex(c(1.0, 1e-9)),
            Err(Error::ZetaPole { .. })
        ));
        assert!(zeta_complex(c(0.5, 400.0)).is_err());
    }

    #[test]
    fn derivative_reference_values() {
        // mpmath, 17 digits
        let cases = [
            (c(2.0, 0.0), c(-0.93754825431584376, 0.0)),
            (c(0.5, 14.0), c(0.74823369612008626, 0.20443653378499742)),
            (c(2.0, 3.0), c(0.14012959011748648, 0.021514678279196658)),
            (c(0.5, 100.0), c(-3.7273127096446482, -0.19422870257374323)),
        ];
        for (s, want) in cases {
            let got = zeta_prime(s).unwrap();
            assert!(
                (got - want).norm() < 1e-8 * want.norm(),
                "zeta'({s}): {got} vs {want}"
            );
        }
    }

    #[test]
    fn derivative_matches_series_oracle_at_two() {
        // independent oracle: zeta'(2) = -sum ln(n)/n^2 with integral tail
        let n_max = 2_000_000u64;
        let mut acc = KahanSum::new();
        for n in 2..=n_max {
            let nf = n as f64;
            acc.add(nf.ln() / (nf * nf));
        }
        let nf = n_max as f64;
        let tail = (nf.ln() + 1.0) / nf + nf.ln() / (2.0 * nf * nf);
        let oracle = -(acc.value() + tail);
        let got = zeta_prime(c(2.0, 0.0)).unwrap();
        assert!((got.re - oracle).abs() < 1e-8, "{} vs oracle {}", got.re, oracle);
        assert!(got.im.abs() < 1e-12);
    }

    #[test]
    fn derivative_matches_central_differences() {
        let h = 1e-6;
        for s in [c(0.5, 14.134), c(0.5, 40.0), c(1.3, 21.0), c(2.5, 60.0)] {
            let fd = (zeta_complex(s + c(h, 0.0)).unwrap() - zeta_complex(s - c(h, 0.0)).unwrap())
                / (2.0 * h);
            let an = zeta_prime(s).unwrap();
            assert!(
                (fd - an).norm() < 1e-5 * an.norm(),
                "finite differences disagree at {s}: {fd} vs {an}"
            );
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn reflection_symmetry(re in 0.05f64..4.0, im in 0.1f64..90.0) {
                let s = c(re, im);
                let a = zeta_complex(s.conj()).unwrap();
                let b = zeta_complex(s).unwrap().conj();
                prop_assert!((a - b).norm() <= 1e-11 * b.norm().max(1e-3));
            }

            #[test]
            fn derivative_reflection(re in 0.05f64..4.0, im in 0.1f64..60.0) {
                let s = c(re, im);
                let a = zeta_prime(s.conj()).unwrap();
                let b = zeta_prime(s).unwrap().conj();
                prop_assert!((a - b).norm() <= 1e-9 * b.norm().max(1e-3));
            }
        }
    }
}
