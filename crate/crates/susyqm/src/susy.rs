//! Superpotential families, Riccati partner potentials, zero-energy ground
//! states, SUSY-breaking classification and the A/A† intertwiners.
//!
//! Conventions: A = W + d/dx and A† = W − d/dx, so H∓ = p² + W² ∓ W′ and
//! the minus sector carries the zero mode ψ₀ ∝ exp(−∫₀ˣ W) when it is
//! normalizable.

use crate::error::Error;
use crate::numerics::grid::{GridFunction, GridSpec};
use crate::numerics::special::gamma_fn;
use crate::Result;

/// Which member of a partner pair a quantity belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    Minus,
    Plus,
}

impl Sector {
    /// The ± sign carried by this sector in V∓ = W² ∓ W′.
    pub fn riccati_sign(self) -> f64 {
        match self {
            Sector::Minus => -1.0,
            Sector::Plus => 1.0,
        }
    }
}

/// Sign function with ε(0) = 0; grids place x = 0 on a sample so the
/// convention is actually exercised.
pub fn sign_fn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// The analytic superpotential families used throughout the toolkit.
#[derive(Debug, Clone)]
pub enum Superpotential {
    /// W(x) = g·x^{2n+1}
    OddMonomial { g: f64, n: u32 },
    /// W(x) = g·ε(x)·x^{2n}
    SignMonomial { g: f64, n: u32 },
    /// W(r) = e²/(2(l+j+1)) − (l+j+1)/r on r > 0 (the (j+1)-th member of
    /// the radial Coulomb hierarchy with angular momentum l)
    CoulombRadial { e2: f64, l: u32, j: u32 },
    /// W(x) = −(π/L)·cot(πx/L) on 0 < x < L
    WellCotangent { length: f64 },
    /// Sampled superpotential with its sampled derivative.
    Tabulated {
        w: GridFunction,
        dw: GridFunction,
    },
}

/// Symbolic record of a Dirac-delta contribution to a partner pair:
/// V∓ picks up ∓weight·δ(x − position).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaSpike {
    pub position: f64,
    pub weight: f64,
}

impl Superpotential {
    /// W(x).
    pub fn w(&self, x: f64) -> f64 {
        match self {
            Superpotential::OddMonomial { g, n } => g * x.powi(2 * *n as i32 + 1),
            Superpotential::SignMonomial { g, n } => g * sign_fn(x) * x.powi(2 * *n as i32),
            Superpotential::CoulombRadial { e2, l, j } => {
                let k = (l + j + 1) as f64;
                e2 / (2.0 * k) - k / x
            }
            Superpotential::WellCotangent { length } => {
                let s = std::f64::consts::PI / length;
                -s / (s * x).tan()
            }
            Superpotential::Tabulated { w, .. } => w.interp_cubic(x),
        }
    }

    /// Classical derivative W′(x) away from distributional points.
    pub fn dw(&self, x: f64) -> f64 {
        match self {
            Superpotential::OddMonomial { g, n } => {
                let p = 2 * *n as i32 + 1;
                g * p as f64 * x.powi(p - 1)
            }
            Superpotential::SignMonomial { g, n } => {
                if *n == 0 {
                    0.0 // plus a 2g·δ(x) spike, recorded separately
                } else {
                    let p = 2 * *n as i32;
                    g * p as f64 * sign_fn(x) * x.powi(p - 1)
                }
            }
            Superpotential::CoulombRadial { l, j, .. } => {
                let k = (l + j + 1) as f64;
                k / (x * x)
            }
            Superpotential::WellCotangent { length } => {
                let s = std::f64::consts::PI / length;
                s * s / (s * x).sin().powi(2)
            }
            Superpotential::Tabulated { dw, .. } => dw.interp_cubic(x),
        }
    }

    /// ∫₀ˣ W(y) dy in closed form per family (up to a constant for the
    /// singular families, which only shifts the normalization of e^{−∫W}).
    /// Tabulated inputs fall back to cumulative trapezoid quadrature.
    pub fn integral_w(&self, x: f64) -> f64 {
        match self {
            Superpotential::OddMonomial { g, n } => {
                let p = 2 * *n + 2;
                g * x.powi(p as i32) / p as f64
            }
            Superpotential::SignMonomial { g, n } => {
                let p = 2 * *n + 1;
                g * x.abs().powi(p as i32) / p as f64
            }
            Superpotential::CoulombRadial { e2, l, j } => {
                let k = (l + j + 1) as f64;
                e2 * x / (2.0 * k) - k * x.ln()
            }
            Superpotential::WellCotangent { length } => {
                let s = std::f64::consts::PI / length;
                -(s * x).sin().ln()
            }
            Superpotential::Tabulated { w, .. } => {
                // trapezoid from the sample nearest 0
                let dx = w.dx();
                let zero = w.index_of(0.0).unwrap_or(0);
                let target = w.index_of(x).unwrap_or(if x < w.x0() { 0 } else { w.len() - 1 });
                let mut acc = 0.0;
                if target >= zero {
                    for i in zero..target {
                        acc += 0.5 * (w.value(i) + w.value(i + 1)) * dx;
                    }
                } else {
                    for i in target..zero {
                        acc -= 0.5 * (w.value(i) + w.value(i + 1)) * dx;
                    }
                }
                acc
            }
        }
    }

    /// The delta-function part of W′, present only for W = g·ε(x).
    pub fn delta_spike(&self) -> Option<DeltaSpike> {
        match self {
            Superpotential::SignMonomial { g, n: 0 } => Some(DeltaSpike {
                position: 0.0,
                weight: 2.0 * g,
            }),
            _ => None,
        }
    }

    /// Domain on which the superpotential is defined, used by samplers.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            Superpotential::CoulombRadial { .. } => (0.0, f64::INFINITY),
            Superpotential::WellCotangent { length } => (0.0, *length),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }
}

/// The Riccati pair V∓ = W² ∓ W′ generated by one superpotential.
#[derive(Debug, Clone)]
pub struct PartnerPair {
    w: Superpotential,
    /// Distributional part: V∓ carries ∓weight·δ at the recorded position.
    pub delta_spike: Option<DeltaSpike>,
}

impl PartnerPair {
    pub fn superpotential(&self) -> &Superpotential {
        &self.w
    }

    pub fn v_minus(&self, x: f64) -> f64 {
        let w = self.w.w(x);
        w * w - self.w.dw(x)
    }

    pub fn v_plus(&self, x: f64) -> f64 {
        let w = self.w.w(x);
        w * w + self.w.dw(x)
    }

    pub fn v(&self, sector: Sector, x: f64) -> f64 {
        match sector {
            Sector::Minus => self.v_minus(x),
            Sector::Plus => self.v_plus(x),
        }
    }
}

/// Builds the partner pair of a superpotential; the delta spike of
/// W = g·ε(x) is recorded symbolically rather than sampled.
pub fn partner_potentials(w: &Superpotential) -> PartnerPair {
    PartnerPair {
        delta_spike: w.delta_spike(),
        w: w.clone(),
    }
}

/// Whether supersymmetry is preserved, and which sector holds the
/// normalizable zero mode when it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SusyStatus {
    Preserved { zero_mode: Sector },
    Broken,
}

/// Decides SUSY breaking by the asymptotic sign test: preserved with a
/// minus-sector zero mode iff W > 0 toward +∞ and W < 0 toward −∞
/// (swapped signs flip the sector via W → −W); equal asymptotic signs
/// mean no normalizable zero mode in either sector.
pub fn susy_status(w: &Superpotential) -> SusyStatus {
    const X_BIG: f64 = 20.0;
    let (lo, hi) = w.domain();
    let (x_neg, x_pos) = match w {
        Superpotential::Tabulated { w, .. } => (w.x0(), w.x_end()),
        _ => {
            let lo_probe = if lo.is_infinite() { -X_BIG } else { lo + 1e-6 * (hi.min(X_BIG) - lo) };
            let hi_probe = if hi.is_infinite() { X_BIG } else { hi - 1e-6 * (hi - lo.max(-X_BIG)) };
            (lo_probe, hi_probe)
        }
    };
    let w_neg = w.w(x_neg);
    let w_pos = w.w(x_pos);
    if w_pos > 0.0 && w_neg < 0.0 {
        SusyStatus::Preserved {
            zero_mode: Sector::Minus,
        }
    } else if w_pos < 0.0 && w_neg > 0.0 {
        SusyStatus::Preserved {
            zero_mode: Sector::Plus,
        }
    } else {
        SusyStatus::Broken
    }
}

/// Normalized zero-energy ground state ψ₀(x) = N·exp(−∫₀ˣ W) sampled on
/// `grid`. Fails when SUSY is broken for `w`.
pub fn ground_state(w: &Superpotential, grid: GridSpec) -> Result<GridFunction> {
    match susy_status(w) {
        SusyStatus::Preserved {
            zero_mode: Sector::Minus,
        } => {}
        SusyStatus::Preserved {
            zero_mode: Sector::Plus,
        } => {
            return Err(Error::BrokenSusy(
                "zero mode lives in the plus sector; flip W → −W first".into(),
            ))
        }
        SusyStatus::Broken => {
            return Err(Error::BrokenSusy("no normalizable zero mode".into()));
        }
    }
    // subtract the running minimum of the exponent so the exponential
    // never overflows before normalization
    let exponents: Vec<f64> = (0..grid.n).map(|i| -w.integral_w(grid.x(i))).collect();
    let peak = exponents.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let values: Vec<f64> = exponents.iter().map(|&e| (e - peak).exp()).collect();
    GridFunction::new(grid.x0, grid.dx, values)?.normalized()
}

/// Closed-form normalization constant of the odd-monomial ground state
/// ψ₀ = N·exp(−g(x²)^{n+1}/(2(n+1))):
/// N = (g·(n+1)^{2n+1} / Γ(1/(2(n+1)))^{2(n+1)})^{1/(4(n+1))}.
pub fn odd_monomial_norm(g: f64, n: u32) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Domain(format!("need g > 0, got {g}")));
    }
    let np1 = (n + 1) as f64;
    let gamma = gamma_fn(1.0 / (2.0 * np1))?;
    Ok((g * np1.powf(2.0 * n as f64 + 1.0) / gamma.powf(2.0 * np1)).powf(1.0 / (4.0 * np1)))
}

/// A = W + d/dx applied on the interior grid points by O(dx²) central
/// differences.
pub fn apply_a(w: &Superpotential, psi: &GridFunction) -> Result<GridFunction> {
    apply_ladder(w, psi, 1.0)
}

/// A† = W − d/dx applied on the interior grid points.
pub fn apply_adag(w: &Superpotential, psi: &GridFunction) -> Result<GridFunction> {
    apply_ladder(w, psi, -1.0)
}

fn apply_ladder(w: &Superpotential, psi: &GridFunction, derivative_sign: f64) -> Result<GridFunction> {
    if psi.dx() > 0.1 {
        return Err(Error::GridTooCoarse { dx: psi.dx() });
    }
    let dpsi = psi.derivative()?;
    let interior = psi.trimmed(1)?;
    let values = (0..interior.len())
        .map(|i| {
            let x = interior.x(i);
            w.w(x) * interior.value(i) + derivative_sign * dpsi.value(i)
        })
        .collect();
    GridFunction::new(interior.x0(), interior.dx(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn grid() -> GridSpec {
        GridSpec::symmetric(8.0, 1e-3)
    }

    #[test]
    fn odd_monomial_partner_is_shifted_oscillator() {
        // W = g·x gives V∓ = g²x² ∓ g
        let g = 1.7;
        let pair = partner_potentials(&Superpotential::OddMonomial { g, n: 0 });
        for x in [-2.0, -0.3, 0.0, 1.1, 4.0] {
            assert!((pair.v_minus(x) - (g * g * x * x - g)).abs() < 1e-12);
            assert!((pair.v_plus(x) - (g * g * x * x + g)).abs() < 1e-12);
        }
        assert!(pair.delta_spike.is_none());
    }

    #[test]
    fn sign_monomial_partner_is_quartic_with_kink() {
        // W = g·ε(x)x² gives V∓ = g²x⁴ ∓ 2g|x|
        let g = 0.8;
        let pair = partner_potentials(&Superpotential::SignMonomial { g, n: 1 });
        for x in [-2.0, -0.5, 0.7, 3.0] {
            let want_minus = g * g * x.powi(4) - 2.0 * g * x.abs();
            assert!((pair.v_minus(x) - want_minus).abs() < 1e-12);
            assert!((pair.v_plus(x) - (g * g * x.powi(4) + 2.0 * g * x.abs())).abs() < 1e-12);
        }
        assert!(pair.delta_spike.is_none());
    }

    #[test]
    fn sign_function_partner_records_delta_spike() {
        // W = g·ε(x) gives V∓ = g² ∓ 2g·δ(x)
        let g = 2.5;
        let pair = partner_potentials(&Superpotential::SignMonomial { g, n: 0 });
        for x in [-1.0, 0.5, 3.0] {
            assert!((pair.v_minus(x) - g * g).abs() < 1e-12);
            assert!((pair.v_plus(x) - g * g).abs() < 1e-12);
        }
        let spike = pair.delta_spike.unwrap();
        assert_eq!(spike.position, 0.0);
        assert!((spike.weight - 2.0 * g).abs() < 1e-12);
    }

    #[test]
    fn partner_difference_is_twice_dw() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let families = [
            Superpotential::OddMonomial { g: 1.3, n: 1 },
            Superpotential::SignMonomial { g: 0.9, n: 2 },
            Superpotential::CoulombRadial { e2: 2.0, l: 1, j: 0 },
            Superpotential::WellCotangent { length: 3.0 },
        ];
        for w in &families {
            let pair = partner_potentials(w);
            let (lo, hi) = w.domain();
            for _ in 0..50 {
                let x = if lo.is_infinite() {
                    rng.gen_range(-4.0..4.0)
                } else {
                    rng.gen_range(lo + 0.05 * (hi.min(8.0) - lo)..hi.min(8.0) * 0.95)
                };
                if x == 0.0 {
                    continue;
                }
                let d = pair.v_plus(x) - pair.v_minus(x);
                assert!(
                    (d - 2.0 * w.dw(x)).abs() <= 1e-12 * (1.0 + d.abs()),
                    "V₊−V₋ ≠ 2W′ at x={x}"
                );
            }
        }
    }

    #[test]
    fn ground_state_of_unit_oscillator_is_gaussian() {
        let w = Superpotential::OddMonomial { g: 1.0, n: 0 };
        let psi = ground_state(&w, grid()).unwrap();
        let norm_const = (1.0 / std::f64::consts::PI).powf(0.25);
        let mut worst = 0.0_f64;
        for (x, v) in psi.points() {
            worst = worst.max((v - norm_const * (-0.5 * x * x).exp()).abs());
        }
        assert!(worst < 1e-6, "max deviation {worst}");
    }

    #[test]
    fn ground_state_of_sign_function_well() {
        // √g·e^{−g|x|}
        let g = 1.6;
        let w = Superpotential::SignMonomial { g, n: 0 };
        let psi = ground_state(&w, GridSpec::symmetric(12.0, 1e-3)).unwrap();
        let mut worst = 0.0_f64;
        for (x, v) in psi.points() {
            worst = worst.max((v - g.sqrt() * (-g * x.abs()).exp()).abs());
        }
        assert!(worst < 1e-4, "max deviation {worst}");
    }

    #[test]
    fn ground_state_of_sign_monomial_quartic() {
        // (3/2)^{1/3}·g^{1/6}·Γ(1/3)^{−1/2}·e^{−g|x|³/3}
        let g = 1.0;
        let w = Superpotential::SignMonomial { g, n: 1 };
        let psi = ground_state(&w, grid()).unwrap();
        let n0 = (1.5_f64).powf(1.0 / 3.0) * g.powf(1.0 / 6.0)
            / gamma_fn(1.0 / 3.0).unwrap().sqrt();
        let mut worst = 0.0_f64;
        for (x, v) in psi.points() {
            worst = worst.max((v - n0 * (-g * x.abs().powi(3) / 3.0).exp()).abs());
        }
        assert!(worst < 1e-6, "max deviation {worst}");
    }

    #[test]
    fn ground_state_has_no_nodes() {
        for w in [
            Superpotential::OddMonomial { g: 0.7, n: 1 },
            Superpotential::SignMonomial { g: 1.2, n: 2 },
        ] {
            let psi = ground_state(&w, grid()).unwrap();
            assert_eq!(psi.node_count(), 0);
            assert!(psi.values().iter().all(|&v| v > 0.0));
        }
    }

    #[test]
    fn odd_monomial_norm_reduces_to_gaussian() {
        let n0 = odd_monomial_norm(1.0, 0).unwrap();
        assert!((n0 - (1.0 / std::f64::consts::PI).powf(0.25)).abs() < 1e-12);
        let n2 = odd_monomial_norm(2.0, 0).unwrap();
        assert!((n2 - (2.0 / std::f64::consts::PI).powf(0.25)).abs() < 1e-12);
    }

    #[test]
    fn odd_monomial_norm_matches_quadrature() {
        // oracle: 1/√(∫ exp(−g(x²)^{n+1}/(n+1)) dx) by adaptive quadrature
        use crate::numerics::quad::integrate;
        for (g, n) in [(1.0, 1u32), (2.3, 1), (1.0, 2), (0.6, 3)] {
            let np1 = (n + 1) as f64;
            let integral = integrate(
                |x: f64| (-g * x.powi(2).powf(np1) / np1).exp(),
                f64::NEG_INFINITY,
                f64::INFINITY,
                1e-12,
            )
            .unwrap();
            let oracle = 1.0 / integral.sqrt();
            let got = odd_monomial_norm(g, n).unwrap();
            assert!(
                (got - oracle).abs() < 1e-10 * oracle,
                "g={g}, n={n}: {got} vs {oracle}"
            );
        }
    }

    #[test]
    fn status_odd_monomials_preserved() {
        for n in 0..4 {
            let st = susy_status(&Superpotential::OddMonomial { g: 1.0, n });
            assert_eq!(
                st,
                SusyStatus::Preserved {
                    zero_mode: Sector::Minus
                }
            );
        }
    }

    #[test]
    fn status_sign_monomials_preserved() {
        for n in 0..4 {
            let st = susy_status(&Superpotential::SignMonomial { g: 2.0, n });
            assert_eq!(
                st,
                SusyStatus::Preserved {
                    zero_mode: Sector::Minus
                }
            );
        }
    }

    #[test]
    fn status_even_monomial_broken() {
        // w = g·x² has equal asymptotic signs: no normalizable zero mode
        let spec = GridSpec::symmetric(20.0, 0.01);
        let w = GridFunction::sample(spec, |x| 1.3 * x * x).unwrap();
        let dw = GridFunction::sample(spec, |x| 2.6 * x).unwrap();
        let st = susy_status(&Superpotential::Tabulated { w, dw });
        assert_eq!(st, SusyStatus::Broken);
    }

    #[test]
    fn status_flips_sector_under_negation() {
        let spec = GridSpec::symmetric(20.0, 0.01);
        let tab = |sign: f64| Superpotential::Tabulated {
            w: GridFunction::sample(spec, |x| sign * x).unwrap(),
            dw: GridFunction::sample(spec, |_| sign).unwrap(),
        };
        assert_eq!(
            susy_status(&tab(1.0)),
            SusyStatus::Preserved {
                zero_mode: Sector::Minus
            }
        );
        assert_eq!(
            susy_status(&tab(-1.0)),
            SusyStatus::Preserved {
                zero_mode: Sector::Plus
            }
        );
    }

    #[test]
    fn broken_susy_ground_state_is_an_error() {
        let spec = GridSpec::symmetric(20.0, 0.01);
        let w = GridFunction::sample(spec, |x| x * x).unwrap();
        let dw = GridFunction::sample(spec, |x| 2.0 * x).unwrap();
        let err = ground_state(&Superpotential::Tabulated { w, dw }, grid());
        assert!(matches!(err, Err(Error::BrokenSusy(_))));
    }

    #[test]
    fn a_annihilates_its_ground_state() {
        for w in [
            Superpotential::OddMonomial { g: 1.0, n: 0 },
            Superpotential::OddMonomial { g: 1.4, n: 1 },
            Superpotential::SignMonomial { g: 1.0, n: 1 },
        ] {
            let psi = ground_state(&w, grid()).unwrap();
            let a_psi = apply_a(&w, &psi).unwrap();
            assert!(
                a_psi.max_abs() <= 1e-5,
                "‖Aψ₀‖∞ = {} for {w:?}",
                a_psi.max_abs()
            );
        }
    }

    #[test]
    fn a_maps_first_excited_to_partner_ground() {
        // w = x: A(x·e^{−x²/2}) ∝ e^{−x²/2}
        let w = Superpotential::OddMonomial { g: 1.0, n: 0 };
        let spec = grid();
        let psi1 = GridFunction::sample(spec, |x| x * (-0.5 * x * x).exp())
            .unwrap()
            .normalized()
            .unwrap();
        let mapped = apply_a(&w, &psi1).unwrap();
        let target = GridFunction::sample(mapped.spec(), |x| (-0.5 * x * x).exp())
            .unwrap()
            .normalized()
            .unwrap();
        let overlap = mapped.normalized().unwrap().inner(&target).unwrap();
        assert!((overlap.abs() - 1.0).abs() < 1e-8, "overlap {overlap}");
    }

    #[test]
    fn normalization_chain_for_sho() {
        // ψ⁺₀ = (E⁻₁)^{−1/2}·Aψ⁻₁ with E⁻₁ = 2 lands on a unit-norm state
        let w = Superpotential::OddMonomial { g: 1.0, n: 0 };
        let spec = grid();
        let psi1 = GridFunction::sample(spec, |x| x * (-0.5 * x * x).exp())
            .unwrap()
            .normalized()
            .unwrap();
        let mapped = apply_a(&w, &psi1).unwrap();
        let psi_plus = mapped.map(|_, v| v / 2.0_f64.sqrt()).unwrap();
        assert!((psi_plus.norm() - 1.0).abs() < 1e-4, "norm {}", psi_plus.norm());
    }

    #[test]
    fn a_and_adag_are_adjoint() {
        // ⟨Aφ, χ⟩ = ⟨φ, A†χ⟩ for smooth, compactly supported grid functions
        let w = Superpotential::OddMonomial { g: 1.1, n: 1 };
        let spec = GridSpec::symmetric(5.0, 1e-3);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..5 {
            let (a1, a2, a3): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
            let bump = move |x: f64| {
                if x.abs() >= 4.0 {
                    0.0
                } else {
                    (a1 + a2 * x + a3 * x * x) * (-1.0 / (16.0 - x * x)).exp()
                }
            };
            let (b1, b2): (f64, f64) = (rng.gen(), rng.gen());
            let bump2 = move |x: f64| {
                if x.abs() >= 4.0 {
                    0.0
                } else {
                    (b1 * x + b2 * x.powi(3)) * (-1.0 / (16.0 - x * x)).exp()
                }
            };
            let phi = GridFunction::sample(spec, bump).unwrap();
            let chi = GridFunction::sample(spec, bump2).unwrap();
            let lhs = apply_a(&w, &phi).unwrap().inner(&chi.trimmed(1).unwrap()).unwrap();
            let rhs = phi
                .trimmed(1)
                .unwrap()
                .inner(&apply_adag(&w, &chi).unwrap())
                .unwrap();
            assert!((lhs - rhs).abs() < 1e-6, "⟨Aφ,χ⟩={lhs} vs ⟨φ,A†χ⟩={rhs}");
        }
    }

    #[test]
    fn coarse_grid_is_rejected() {
        let w = Superpotential::OddMonomial { g: 1.0, n: 0 };
        let psi = GridFunction::sample(GridSpec::symmetric(4.0, 0.2), |x| (-x * x).exp()).unwrap();
        assert!(matches!(
            apply_a(&w, &psi),
            Err(Error::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn well_cotangent_matches_infinite_well_potentials() {
        // V₋ = −π²/L², V₊ = −π²/L² + 2(π/L)²csc²(πx/L)
        let length = 2.0;
        let s = std::f64::consts::PI / length;
        let pair = partner_potentials(&Superpotential::WellCotangent { length });
        for x in [0.2, 0.5, 1.0, 1.7] {
            assert!((pair.v_minus(x) + s * s).abs() < 1e-10);
            let want = -s * s + 2.0 * s * s / (s * x).sin().powi(2);
            assert!((pair.v_plus(x) - want).abs() < 1e-10);
        }
    }
}
