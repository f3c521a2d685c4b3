//! Hierarchies of Hamiltonians, shape-invariant spectra, and the two
//! closed-form showcases: the hydrogen radial problem and the infinite
//! square well partner.
//!
//! A chain stores each member as (superpotential W_k, ground energy E₀^k);
//! its potential V_k = W_k² − W_k′ + E₀^k is derived on demand, which keeps
//! the Riccati relation between neighbours true by construction. Level k of
//! member n equals level 0 of member n+k, so excited energies are read off
//! the chain's ground energies.

use crate::error::Error;
use crate::numerics::grid::{GridFunction, GridSpec};
use crate::susy::Superpotential;
use crate::Result;

/// One member of a hierarchy: a factorized Hamiltonian
/// H = A†A + ground_energy.
#[derive(Debug, Clone)]
pub struct ChainMember {
    pub w: Superpotential,
    pub ground_energy: f64,
}

/// A finite hierarchy chain H₀, H₁, … where each member is the SUSY
/// partner of the previous one shifted by its ground energy.
#[derive(Debug, Clone)]
pub struct HierarchyChain {
    members: Vec<ChainMember>,
}

/// Row of a pairing table: `energy` is the spectrum value shared by every
/// (member, level) pair with member + level fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairedLevel {
    pub member: usize,
    pub level: usize,
    pub energy: f64,
}

impl HierarchyChain {
    pub fn new(members: Vec<ChainMember>) -> Result<Self> {
        if members.len() < 2 {
            return Err(Error::Domain("a chain needs at least two members".into()));
        }
        for w in members.windows(2) {
            if w[1].ground_energy < w[0].ground_energy - 1e-12 {
                return Err(Error::Domain(
                    "ground energies must be non-decreasing along the chain".into(),
                ));
            }
        }
        Ok(Self { members })
    }

    /// Shifted-oscillator chain: every member has W = g·x and the ground
    /// energies climb by 2g — the algebraic ladder of the harmonic
    /// oscillator.
    pub fn shifted_oscillator(g: f64, depth: usize) -> Result<Self> {
        if !(g > 0.0) {
            return Err(Error::Domain(format!("need g > 0, got {g}")));
        }
        let members = (0..depth.max(2))
            .map(|k| ChainMember {
                w: Superpotential::OddMonomial { g, n: 0 },
                ground_energy: 2.0 * g * k as f64,
            })
            .collect();
        Self::new(members)
    }

    /// Chain generated by iterating a shape-invariant model from `a_start`.
    pub fn from_shape_invariant(
        model: &ShapeInvariantModel,
        a_start: f64,
        depth: usize,
        grid: GridSpec,
    ) -> Result<Self> {
        let spectrum = shape_invariant_spectrum(model, a_start, depth.max(2) - 1)?;
        let mut a = a_start;
        let mut members = Vec::with_capacity(depth.max(2));
        for ground in spectrum {
            let w = GridFunction::sample(grid, |x| model.w(x, a))?;
            let dw = GridFunction::sample(grid, |x| model.dw(x, a))?;
            members.push(ChainMember {
                w: Superpotential::Tabulated { w, dw },
                ground_energy: ground,
            });
            a = model.next(a);
        }
        Self::new(members)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: ≥ 2 members
    }

    pub fn member(&self, i: usize) -> &ChainMember {
        &self.members[i]
    }

    /// V_i(x) = W_i² − W_i′ + E₀^i.
    pub fn potential(&self, i: usize, x: f64) -> f64 {
        let m = &self.members[i];
        let w = m.w.w(x);
        w * w - m.w.dw(x) + m.ground_energy
    }

    /// V_j rebuilt from member 0 by accumulating 2·W′ along the chain.
    pub fn potential_via_w_sum(&self, j: usize, x: f64) -> f64 {
        let mut v = self.potential(0, x);
        for l in 0..j {
            v += 2.0 * self.members[l].w.dw(x);
        }
        v
    }

    /// V_j rebuilt from member 0 and the log of the product of the ground
    /// states of members 0..j: V_j = V₀ − 2·(ln Π ψ₀)″. Lives on the
    /// interior of `grid`.
    pub fn potential_via_ground_states(&self, j: usize, grid: GridSpec) -> Result<GridFunction> {
        let mut log_product = GridFunction::sample(grid, |_| 0.0)?;
        for l in 0..j {
            let psi = crate::susy::ground_state(&self.members[l].w, grid)?;
            log_product = log_product.map(|x, v| {
                let i = psi.index_of(x).expect("same grid");
                v + psi.value(i).abs().max(1e-300).ln()
            })?;
        }
        let curvature = log_product.second_derivative()?;
        curvature.map(|x, c| self.potential(0, x) - 2.0 * c)
    }

    /// The pairing table for level `k` of member 0: every (member j,
    /// level k−j) pair shares the energy E₀ of member k.
    pub fn chain_energies(&self, k: usize) -> Result<Vec<PairedLevel>> {
        if k >= self.len() {
            return Err(Error::Domain(format!(
                "level {k} needs a chain of depth > {k}, have {}",
                self.len()
            )));
        }
        let energy = self.members[k].ground_energy;
        Ok((0..=k)
            .map(|j| PairedLevel {
                member: j,
                level: k - j,
                energy,
            })
            .collect())
    }
}

/// Shape-invariant family V(x; a): partner potentials differ only by a
/// parameter step and an x-independent remainder,
/// V₊(x; a_k) = V₋(x; a_{k+1}) + R(a_{k+1}).
pub struct ShapeInvariantModel {
    w: Box<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    dw: Box<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    next: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    remainder: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl ShapeInvariantModel {
    pub fn new(
        w: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        dw: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        next: impl Fn(f64) -> f64 + Send + Sync + 'static,
        remainder: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            w: Box::new(w),
            dw: Box::new(dw),
            next: Box::new(next),
            remainder: Box::new(remainder),
        }
    }

    pub fn w(&self, x: f64, a: f64) -> f64 {
        (self.w)(x, a)
    }

    pub fn dw(&self, x: f64, a: f64) -> f64 {
        (self.dw)(x, a)
    }

    pub fn next(&self, a: f64) -> f64 {
        (self.next)(a)
    }

    pub fn remainder(&self, a: f64) -> f64 {
        (self.remainder)(a)
    }

    pub fn v_minus(&self, x: f64, a: f64) -> f64 {
        let w = self.w(x, a);
        w * w - self.dw(x, a)
    }

    pub fn v_plus(&self, x: f64, a: f64) -> f64 {
        let w = self.w(x, a);
        w * w + self.dw(x, a)
    }

    /// Max |V₊(x; a) − V₋(x; a′) − R(a′)| over the sample points — zero for
    /// a genuinely shape-invariant model.
    pub fn invariance_defect(&self, a: f64, xs: &[f64]) -> f64 {
        let a_next = self.next(a);
        let r = self.remainder(a_next);
        xs.iter()
            .map(|&x| (self.v_plus(x, a) - self.v_minus(x, a_next) - r).abs())
            .fold(0.0_f64, f64::max)
    }

    /// Harmonic oscillator: W = x, constant remainder 2 (ħ = 2m = ω = 1).
    pub fn harmonic_oscillator() -> Self {
        Self::new(|x, _| x, |_, _| 1.0, |a| a, |_| 2.0)
    }

    /// Radial Coulomb problem parametrized by the angular momentum:
    /// W(r; l) = e²/(2(l+1)) − (l+1)/r, l ↦ l+1,
    /// R(l) = e⁴/4·(1/l² − 1/(l+1)²).
    pub fn hydrogen(e2: f64) -> Self {
        let e4_over_4 = e2 * e2 / 4.0;
        Self::new(
            move |r, l| e2 / (2.0 * (l + 1.0)) - (l + 1.0) / r,
            move |r, l| (l + 1.0) / (r * r),
            |l| l + 1.0,
            move |l| e4_over_4 * (1.0 / (l * l) - 1.0 / ((l + 1.0) * (l + 1.0))),
        )
    }
}

/// Spectrum of a shape-invariant Hamiltonian with parameter `a_start`:
/// E₀ = 0 and E_j = Σ_{k=1..j} R(a_k) with a_k the iterated parameters.
/// Returns the J+1 values E₀..E_J.
pub fn shape_invariant_spectrum(
    model: &ShapeInvariantModel,
    a_start: f64,
    levels: usize,
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(levels + 1);
    out.push(0.0);
    let mut a = a_start;
    let mut acc = 0.0;
    for _ in 0..levels {
        a = model.next(a);
        acc += model.remainder(a);
        out.push(acc);
    }
    Ok(out)
}

/// Closed-form hydrogen level E = −1/(a²·(l+j+1)²) with a = 2/e².
pub fn hydrogen_levels(l: u32, j: u32, e2: f64) -> Result<f64> {
    if !(e2 > 0.0) {
        return Err(Error::Domain(format!("need e² > 0, got {e2}")));
    }
    let a = 2.0 / e2;
    let n = (l + j + 1) as f64;
    Ok(-1.0 / (a * a * n * n))
}

/// The same level obtained through the shape-invariance engine: the
/// hierarchy spectrum shifted by the constant −e⁴/(4(l+1)²) that relates
/// the first chain member to the radial Hamiltonian.
pub fn hydrogen_level_via_hierarchy(l: u32, j: u32, e2: f64) -> Result<f64> {
    if !(e2 > 0.0) {
        return Err(Error::Domain(format!("need e² > 0, got {e2}")));
    }
    let model = ShapeInvariantModel::hydrogen(e2);
    let spectrum = shape_invariant_spectrum(&model, l as f64, j as usize)?;
    let lp1 = (l + 1) as f64;
    Ok(spectrum[j as usize] - e2 * e2 / (4.0 * lp1 * lp1))
}

/// Radial eigenfunction ψ¹_{j,l}(r) ∼ u_{l+j+1,l}(r), built by applying
/// the ladder factors A†_q = W_q − d/dr (q = j..1) to the nodeless seed
/// r^{l+j+1}·e^{−r/(a(l+j+1))}, then normalized.
///
/// Every intermediate state is a polynomial times that fixed exponential,
/// so the ladder is applied exactly in polynomial coefficient space; the
/// energy-difference prefactors come from the shape-invariant spectrum.
pub fn hydrogen_wavefunction(l: u32, j: u32, e2: f64, grid: GridSpec) -> Result<GridFunction> {
    if !(e2 > 0.0) {
        return Err(Error::Domain(format!("need e² > 0, got {e2}")));
    }
    if grid.x0 <= 0.0 {
        return Err(Error::InvalidGrid("radial grid must start at r > 0".into()));
    }
    let a = 2.0 / e2;
    let n = (l + j + 1) as f64;
    let c = a * n; // decay scale of e^{−r/c}

    // seed polynomial r^{l+j+1}
    let mut poly = vec![0.0; (l + j + 2) as usize];
    poly[(l + j + 1) as usize] = 1.0;

    let model = ShapeInvariantModel::hydrogen(e2);
    let spectrum = shape_invariant_spectrum(&model, l as f64, j as usize)?;

    for q in (1..=j).rev() {
        // A†_q with W_q(r) = e²/(2(l+q)) − (l+q)/r acting on P·e^{−r/c}:
        // P ↦ κ_q·P + P/c − P′ − (l+q)·(P/r)
        let lq = (l + q) as f64;
        let kappa = e2 / (2.0 * lq);
        let mut next = vec![0.0; poly.len()];
        for (p, &coef) in poly.iter().enumerate() {
            if coef == 0.0 {
                continue;
            }
            next[p] += (kappa + 1.0 / c) * coef;
            if p > 0 {
                next[p - 1] -= p as f64 * coef; // −P′
                next[p - 1] -= lq * coef; // −(l+q)·P/r, exact: seed powers ≥ 1
            }
        }
        // energy-difference prefactor (E¹_j − E¹_{q−1})^{−1/2}
        let gap = spectrum[j as usize] - spectrum[(q - 1) as usize];
        let scale = 1.0 / gap.sqrt();
        for coef in &mut next {
            *coef *= scale;
        }
        poly = next;
    }

    // sign convention: lowest-order coefficient positive (u ~ +r^{l+1})
    if let Some(&lead) = poly.iter().find(|c| c.abs() > 0.0) {
        if lead < 0.0 {
            for coef in &mut poly {
                *coef = -*coef;
            }
        }
    }

    let eval = |r: f64| -> f64 {
        let mut acc = 0.0;
        for &coef in poly.iter().rev() {
            acc = acc * r + coef;
        }
        acc * (-r / c).exp()
    };
    GridFunction::sample(grid, eval)?.normalized()
}

/// One paired level of the shifted infinite square well (width L, ground
/// energy zero): E⁻_n together with ψ⁻_n and the partner state ψ⁺_{n−1}.
#[derive(Debug, Clone)]
pub struct WellPartnerLevel {
    pub e_minus: f64,
    pub psi_minus: GridFunction,
    pub e_plus: f64,
    pub psi_plus: GridFunction,
}

/// E⁻_n = (π²/L²)·n(n+2) for the well shifted to zero ground energy.
pub fn infinite_well_energy(length: f64, n: u32) -> f64 {
    let s = std::f64::consts::PI / length;
    s * s * (n as f64) * (n as f64 + 2.0)
}

/// Closed-form partner pair of the infinite well at level n ≥ 1: the
/// minus-sector state √(2/L)·sin((n+1)πx/L) and the plus-sector state
///
///   ψ⁺_{n−1} ∝ −cot(πx/L)·sin((n+1)πx/L) + (n+1)·cos((n+1)πx/L),
///
/// both sampled on `grid` ⊂ (0, L). The n = 0 zero mode is unpaired.
pub fn infinite_well_partner(length: f64, n: u32, grid: GridSpec) -> Result<WellPartnerLevel> {
    if !(length > 0.0) {
        return Err(Error::Domain(format!("need L > 0, got {length}")));
    }
    if n == 0 {
        return Err(Error::NoPartner(
            "the n = 0 zero mode has no plus-sector partner".into(),
        ));
    }
    if grid.x0 <= 0.0 || grid.x_end() >= length {
        return Err(Error::InvalidGrid(format!(
            "grid [{}, {}] must sit strictly inside (0, {length})",
            grid.x0,
            grid.x_end()
        )));
    }
    let s = std::f64::consts::PI / length;
    let nf = n as f64;
    let e = infinite_well_energy(length, n);
    let norm_minus = (2.0 / length).sqrt();
    let psi_minus = GridFunction::sample(grid, |x| norm_minus * ((nf + 1.0) * s * x).sin())?;
    let norm_plus = (2.0 / (nf * (nf + 2.0) * length)).sqrt();
    let psi_plus = GridFunction::sample(grid, |x| {
        norm_plus
            * (-((s * x).cos() / (s * x).sin()) * ((nf + 1.0) * s * x).sin()
                + (nf + 1.0) * ((nf + 1.0) * s * x).cos())
    })?;
    Ok(WellPartnerLevel {
        e_minus: e,
        psi_minus,
        e_plus: e,
        psi_plus,
    })
}
