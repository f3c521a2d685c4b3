//! Rayleigh–Ritz variational solver with trial functions
//! φ(x) = Σ_j α_j·x^{j−1}·envelope(x).
//!
//! For the g·ε(x)x² partner potentials (g = 1) the matrix elements have
//! closed forms in Γ functions; for everything else they are assembled by
//! adaptive quadrature with the second derivative of the basis functions
//! taken analytically. Energies for general g follow from the scaling
//! E(g) = g^{2/3}·E(1).

use crate::error::Error;
use crate::numerics::grid::{GridFunction, GridSpec};
use crate::numerics::matrix::DenseMatrix;
use crate::numerics::pencil::{solve_pencil, MatrixPencil};
use crate::numerics::quad::integrate;
use crate::numerics::special::gamma_fn;
use crate::susy::{sign_fn, Sector};
use crate::Result;

/// Envelope of the monomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Envelope {
    /// e^{−|x|³/3}, shaped after the exact zero mode of W = ε(x)x²
    CubicExp,
    /// e^{−x²/2}, the harmonic-oscillator envelope
    Gaussian,
}

impl Envelope {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Envelope::CubicExp => (-x.abs().powi(3) / 3.0).exp(),
            Envelope::Gaussian => (-0.5 * x * x).exp(),
        }
    }
}

/// Basis specification: f_j(x) = x^{j−1}·envelope(x) for j = 1..m.
#[derive(Debug, Clone, Copy)]
pub struct BasisSpec {
    pub envelope: Envelope,
    pub m: usize,
}

impl BasisSpec {
    pub fn new(envelope: Envelope, m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::Domain("basis needs m ≥ 1".into()));
        }
        Ok(Self { envelope, m })
    }

    /// f_j(x), 1-based j.
    pub fn f(&self, j: usize, x: f64) -> f64 {
        x.powi(j as i32 - 1) * self.envelope.eval(x)
    }

    /// Analytic f_j″(x) from the monomial-times-envelope form.
    pub fn f_second(&self, j: usize, x: f64) -> f64 {
        let a = (j - 1) as f64;
        let poly_term = if j >= 3 {
            a * (a - 1.0) * x.powi(j as i32 - 3)
        } else {
            0.0
        };
        match self.envelope {
            Envelope::Gaussian => {
                (poly_term - (2.0 * a + 1.0) * x.powi(j as i32 - 1) + x.powi(j as i32 + 1))
                    * self.envelope.eval(x)
            }
            Envelope::CubicExp => {
                (poly_term - 2.0 * (a + 1.0) * sign_fn(x) * x.powi(j as i32)
                    + x.powi(j as i32 + 3))
                    * self.envelope.eval(x)
            }
        }
    }
}

/// Closed-form pencil for V± = x⁴ ± 2|x| (g = 1) in the x^{j−1}e^{−|x|³/3}
/// basis. Entries with k+l odd vanish by parity; for k+l even,
///
///   S_kl = (3/2)^{(k+l−4)/3}·Γ((k+l−1)/3)
///   H_kl = −2·(3/2)^{(k+l−3)/3}·[((l−1)(l−2) − (l±1)(k+l−3))/(k+l−3)]·Γ((k+l)/3)
///
/// with the ± matching the sector.
pub fn build_pencil_eps_x2(m: usize, sector: Sector) -> Result<MatrixPencil> {
    if m < 1 {
        return Err(Error::Domain("need m ≥ 1".into()));
    }
    let s = |i: usize, j: usize| -> f64 {
        let (k, l) = (i + 1, j + 1);
        if (k + l) % 2 == 1 {
            return 0.0;
        }
        let p = (k + l) as f64;
        (1.5_f64).powf((p - 4.0) / 3.0) * gamma_fn((p - 1.0) / 3.0).expect("positive argument")
    };
    let pm = sector.riccati_sign(); // −1 for minus, +1 for plus
    let h = |i: usize, j: usize| -> f64 {
        let (k, l) = (i + 1, j + 1);
        if (k + l) % 2 == 1 {
            return 0.0;
        }
        let p = (k + l) as f64;
        let lf = l as f64;
        let numer = (lf - 1.0) * (lf - 2.0) - (lf + pm) * (p - 3.0);
        -2.0 * (1.5_f64).powf((p - 3.0) / 3.0) * (numer / (p - 3.0))
            * gamma_fn(p / 3.0).expect("positive argument")
    };
    MatrixPencil::from_fns(m, s, h)
}

/// Pencil assembled by quadrature: S_kl = ∫f_k·f_l and
/// H_kl = ∫f_k·(−f_l″ + V·f_l), then H ← (H + Hᵀ)/2.
pub fn build_pencil_quadrature<V: Fn(f64) -> f64>(
    basis: &BasisSpec,
    v: V,
    tol: f64,
) -> Result<MatrixPencil> {
    let m = basis.m;
    let mut s = DenseMatrix::zeros(m);
    for i in 0..m {
        for j in i..m {
            let val = integrate(
                |x| basis.f(i + 1, x) * basis.f(j + 1, x),
                f64::NEG_INFINITY,
                f64::INFINITY,
                tol,
            )?;
            s[(i, j)] = val;
            s[(j, i)] = val;
        }
    }
    let mut h = DenseMatrix::zeros(m);
    for i in 0..m {
        for j in 0..m {
            h[(i, j)] = integrate(
                |x| basis.f(i + 1, x) * (-basis.f_second(j + 1, x) + v(x) * basis.f(j + 1, x)),
                f64::NEG_INFINITY,
                f64::INFINITY,
                tol,
            )?;
        }
    }
    let sym = h.add(&h.transpose()).scale(0.5);
    MatrixPencil::new(s, sym)
}

/// Parity of a variational level, read off the monomial support of its
/// coefficient vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Solved variational problem: energies ascending, S-normalized
/// coefficient vectors, and per-level parity labels.
#[derive(Debug, Clone)]
pub struct VariationalResult {
    pub basis: BasisSpec,
    pub sector: Option<Sector>,
    pub energies: Vec<f64>,
    pub coefficients: Vec<Vec<f64>>,
    pub parities: Vec<Parity>,
}

impl VariationalResult {
    /// φ_n(x) = Σ_j α^n_j·f_j(x) sampled on `grid`.
    pub fn wavefunction(&self, level: usize, grid: GridSpec) -> Result<GridFunction> {
        let alpha = &self.coefficients[level];
        GridFunction::sample(grid, |x| {
            alpha
                .iter()
                .enumerate()
                .map(|(j, a)| a * self.basis.f(j + 1, x))
                .sum()
        })
    }
}

/// Solves the pencil and assembles the labeled result. Levels come out in
/// ascending energy order; exact degeneracies are broken even-parity
/// first, and each coefficient vector is sign-fixed so its first nonzero
/// entry is positive.
pub fn solve_variational(
    pencil: &MatrixPencil,
    basis: BasisSpec,
    sector: Option<Sector>,
) -> Result<VariationalResult> {
    if pencil.size() != basis.m {
        return Err(Error::Domain(format!(
            "pencil size {} does not match basis size {}",
            pencil.size(),
            basis.m
        )));
    }
    let mut pairs = solve_pencil(pencil)?;
    for pair in &mut pairs {
        let lead = pair.coeffs.iter().find(|c| c.abs() > 1e-12);
        if let Some(&lead) = lead {
            if lead < 0.0 {
                for c in &mut pair.coeffs {
                    *c = -*c;
                }
            }
        }
    }
    let labeled: Vec<(f64, Vec<f64>, Parity)> = pairs
        .into_iter()
        .map(|p| {
            let parity = parity_of(&p.coeffs);
            (p.value, p.coeffs, parity)
        })
        .collect();
    let mut order: Vec<usize> = (0..labeled.len()).collect();
    order.sort_by(|&i, &j| {
        let (ei, ej) = (labeled[i].0, labeled[j].0);
        let scale = ei.abs().max(ej.abs()).max(1.0);
        if (ei - ej).abs() <= 1e-10 * scale {
            // degenerate: even parity first
            let rank = |p: Parity| if p == Parity::Even { 0 } else { 1 };
            rank(labeled[i].2).cmp(&rank(labeled[j].2))
        } else {
            ei.partial_cmp(&ej).unwrap()
        }
    });
    let mut energies = Vec::with_capacity(labeled.len());
    let mut coefficients = Vec::with_capacity(labeled.len());
    let mut parities = Vec::with_capacity(labeled.len());
    for idx in order {
        energies.push(labeled[idx].0);
        coefficients.push(labeled[idx].1.clone());
        parities.push(labeled[idx].2);
    }
    Ok(VariationalResult {
        basis,
        sector,
        energies,
        coefficients,
        parities,
    })
}

fn parity_of(coeffs: &[f64]) -> Parity {
    let mut even = 0.0;
    let mut odd = 0.0;
    for (j, c) in coeffs.iter().enumerate() {
        // j is the monomial power of f_{j+1}
        if j % 2 == 0 {
            even += c.abs();
        } else {
            odd += c.abs();
        }
    }
    if even >= odd {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Schrödinger residual Δ(x) = −φ″(x) + V(x)φ(x) − E·φ(x) by central
/// second differences; lives on the interior of φ's grid.
pub fn residual<V: Fn(f64) -> f64>(phi: &GridFunction, e: f64, v: V) -> Result<GridFunction> {
    let second = phi.second_derivative()?;
    let interior = phi.trimmed(1)?;
    interior.map(|x, val| -second.value(second.index_of(x).unwrap()) + (v(x) - e) * val)
}

/// E(g) = g^{2/3}·E(1): the anharmonic scaling that recovers general
/// coupling from the g = 1 pencils.
pub fn scale_energy(e_at_unit_g: f64, g: f64) -> f64 {
    g.powf(2.0 / 3.0) * e_at_unit_g
}

/// Convenience: energies of V± = x⁴ ± 2|x| at basis size m.
pub fn eps_x2_energies(sector: Sector, m: usize) -> Result<Vec<f64>> {
    let pencil = build_pencil_eps_x2(m, sector)?;
    let basis = BasisSpec::new(Envelope::CubicExp, m)?;
    Ok(solve_variational(&pencil, basis, Some(sector))?.energies)
}
