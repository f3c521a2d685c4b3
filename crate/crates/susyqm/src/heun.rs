//! Frobenius-series machinery for the triconfluent-Heun reduction of the
//! g·ε(x)x² problem.
//!
//! Writing ψ(x) = F(x)·e^{−g|x|³/3} turns −ψ″ + (g²x⁴ − 2g|x|)ψ = Eψ into
//! F″ − 2g·ε(x)x²F′ + E·F = 0, whose power-series coefficients obey a
//! three-term recurrence. The recurrence couples a_j to a_{j−2} and a_{j−3},
//! which blocks the polynomial truncation that quantizes the harmonic
//! oscillator; the one closed-form case is E = 0 on the even branch.

use crate::error::Error;
use crate::numerics::grid::{GridFunction, GridSpec};
use crate::Result;

/// Overflow guard for the recurrence.
const COEFF_OVERFLOW: f64 = 1e300;

/// Default series length; plenty for |x| ≤ 3 where the solutions are
/// compared against Numerov integration.
pub const DEFAULT_J_MAX: usize = 200;

/// Power-series solution on one half-line, where ε(x) is frozen to σ.
#[derive(Debug, Clone)]
pub struct FrobeniusSeries {
    pub a0: f64,
    pub a1: f64,
    pub energy: f64,
    pub g: f64,
    /// value of ε(x) on this branch: +1 for x > 0, −1 for x < 0
    pub sigma: f64,
    pub coeffs: Vec<f64>,
}

/// Coefficients of F = Σ a_j x^j from the recurrence
/// a₂ = −(E/2)·a₀,  a_j = (2gσ(j−3)·a_{j−3} − E·a_{j−2}) / (j(j−1)), j ≥ 3.
pub fn recurrence_coeffs(
    a0: f64,
    a1: f64,
    energy: f64,
    g: f64,
    sigma: f64,
    j_max: usize,
) -> Result<FrobeniusSeries> {
    if j_max < 2 {
        return Err(Error::Domain(format!("need j_max ≥ 2, got {j_max}")));
    }
    if sigma != 1.0 && sigma != -1.0 {
        return Err(Error::Domain(format!("σ must be ±1, got {sigma}")));
    }
    let mut coeffs = Vec::with_capacity(j_max + 1);
    coeffs.push(a0);
    coeffs.push(a1);
    let a2 = -0.5 * energy * a0;
    if !a2.is_finite() || a2.abs() > COEFF_OVERFLOW {
        return Err(Error::SeriesOverflow { index: 2 });
    }
    coeffs.push(a2);
    for j in 3..=j_max {
        let jf = j as f64;
        let a = (2.0 * g * sigma * (jf - 3.0) * coeffs[j - 3] - energy * coeffs[j - 2])
            / (jf * (jf - 1.0));
        if !a.is_finite() || a.abs() > COEFF_OVERFLOW {
            return Err(Error::SeriesOverflow { index: j });
        }
        coeffs.push(a);
    }
    Ok(FrobeniusSeries {
        a0,
        a1,
        energy,
        g,
        sigma,
        coeffs,
    })
}

impl FrobeniusSeries {
    /// First index j with a_j = a_{j+1} = 0 exactly — the signature of a
    /// truncating (polynomial) solution. Generic energies never produce
    /// one; E = 0 on the even branch truncates at j = 0.
    pub fn truncation_index(&self) -> Option<usize> {
        self.coeffs
            .windows(2)
            .position(|w| w[0] == 0.0 && w[1] == 0.0)
    }

    /// F(x) by Horner evaluation.
    pub fn f(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &a in self.coeffs.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// F′(x).
    pub fn f_prime(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for (j, &a) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * x + j as f64 * a;
        }
        acc
    }

    /// F″(x).
    pub fn f_second(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for (j, &a) in self.coeffs.iter().enumerate().skip(2).rev() {
            acc = acc * x + (j * (j - 1)) as f64 * a;
        }
        acc
    }

    /// Residual of F″ − 2gσx²F′ + E·F at one point of this branch.
    pub fn ode_residual(&self, x: f64) -> f64 {
        self.f_second(x) - 2.0 * self.g * self.sigma * x * x * self.f_prime(x)
            + self.energy * self.f(x)
    }

    /// The mirrored branch: same boundary data (a₀, a₁), flipped σ.
    pub fn mirrored(&self) -> Result<Self> {
        recurrence_coeffs(
            self.a0,
            self.a1,
            self.energy,
            self.g,
            -self.sigma,
            self.coeffs.len() - 1,
        )
    }
}

/// ψ(x) = F(x)·e^{−g|x|³/3} sampled on `grid`, with the two half-line
/// branches stitched at x = 0 by the shared boundary data a₀ (value) and
/// a₁ (derivative). The series branch is chosen by the sign of x; `series`
/// supplies the branch matching its own σ.
pub fn evaluate_candidate(series: &FrobeniusSeries, grid: GridSpec) -> Result<GridFunction> {
    let other = series.mirrored()?;
    let (pos, neg) = if series.sigma > 0.0 {
        (series, &other)
    } else {
        (&other, series)
    };
    let values: Vec<f64> = (0..grid.n)
        .map(|i| {
            let x = grid.x(i);
            let f = if x >= 0.0 { pos.f(x) } else { neg.f(x) };
            f * (-series.g * x.abs().powi(3) / 3.0).exp()
        })
        .collect();
    GridFunction::new(grid.x0, grid.dx, values)
}

/// Parameters (α, β, γ, z-scale) of the standard triconfluent Heun form
/// y″ + (−γ − 3z²)y′ + (α + βz − 3z)y = 0 that the substitution
/// z = (2g/3)^{1/3}·x maps onto F″ − 2gx²F′ + E·F = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeunParameters {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub z_scale: f64,
}

pub fn heun_parameters(g: f64, energy: f64) -> Result<HeunParameters> {
    if !(g > 0.0) {
        return Err(Error::Domain(format!("need g > 0, got {g}")));
    }
    Ok(HeunParameters {
        alpha: (1.5 / g).powf(2.0 / 3.0) * energy,
        beta: 3.0,
        gamma: 0.0,
        z_scale: (2.0 * g / 3.0).powf(1.0 / 3.0),
    })
}
