//! Gamma and digamma for positive real arguments.

use crate::error::Error;
use crate::Result;

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

// Lanczos coefficients for g = 7, n = 9 (the GSL/Numerical Recipes set);
// good to ~15 significant digits in double precision.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection keeps the series argument away from the poles
        std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * lanczos_gamma(1.0 - x))
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS_COEF[0];
        for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        SQRT_TWO_PI * t.powf(z + 0.5) * (-t).exp() * acc
    }
}

/// Γ(x) for x > 0, relative error ≲ 1e-13.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("gamma_fn requires x > 0, got {x}")));
    }
    Ok(lanczos_gamma(x))
}

/// ψ(x) = Γ′(x)/Γ(x) for x > 0.
///
/// Recurrence ψ(x) = ψ(x+1) − 1/x pushes the argument above 6, where the
/// asymptotic series in 1/x² converges fast enough for ~1e-13 accuracy.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut shift = 0.0;
    let mut z = x;
    while z < 6.0 {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // Bernoulli-number coefficients of the asymptotic expansion
    let inv2 = 1.0 / (z * z);
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2
                                * (1.0 / 240.0
                                    - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    Ok(shift + z.ln() - 0.5 / z - series)
}
