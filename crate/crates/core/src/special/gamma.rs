//! Complex gamma via the Lanczos approximation (Pugh's tabulation, g = 10.900511,
//! 11 coefficients), with reflection for Re(z) < 1/2.

use num_complex::Complex64;

use crate::error::{Error, Result};

const GAMMA_R: f64 = 10.900511;

const GAMMA_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657173362492472666631120594218414085755;

const POLE_RADIUS: f64 = 1e-9;

fn lanczos_right_half(z: Complex64) -> Complex64 {
    let mut s = Complex64::new(GAMMA_DK[0], 0.0);
    for (i, &dk) in GAMMA_DK.iter().enumerate().skip(1) {
        s += dk / (z + (i as f64 - 1.0));
    }
    let w = (z - Complex64::new(0.5, 0.0) + GAMMA_R) / std::f64::consts::E;
    s * TWO_SQRT_E_OVER_PI * (w.ln() * (z - Complex64::new(0.5, 0.0))).exp()
}

/// Gamma(z) for complex z away from the poles at 0, -1, -2, ...
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    let nearest = z.re.round();
    if nearest <= 0.0 && (z - Complex64::new(nearest, 0.0)).norm() < POLE_RADIUS {
        return Err(Error::GammaPole {
            nearest: nearest as i64,
        });
    }
    if z.re < 0.5 {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let s = (z * std::f64::consts::PI).sin();
        Ok(std::f64::consts::PI / (s * lanczos_right_half(Complex64::new(1.0, 0.0) - z)))
    } else {
        Ok(lanczos_right_half(z))
    }
}
