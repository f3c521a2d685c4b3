//! "Wag the dog" spectrum finder: Numerov integration at trial energies,
//! bisection on the sign of the diverging tail, parity boundary conditions
//! at x = 0.
//!
//! Even potentials are integrated on the half line only: level n carries
//! parity (−1)ⁿ, so the start data alternate between (ψ, ψ′)(0) = (1, 0)
//! and (0, 1). An energy below an eigenvalue makes the tail blow up with
//! one sign, an energy above with the other; bisecting the sign change
//! pins the eigenvalue.

use crate::error::Error;
use crate::numerics::grid::GridSpec;
use crate::numerics::numerov::numerov_integrate;
use crate::numerics::Sign;
use crate::susy::{partner_potentials, Sector, Superpotential};
use crate::variational::{eps_x2_energies, Parity};
use crate::Result;

/// Divergence threshold: the tail sign is read at the first sample whose
/// magnitude exceeds this, or at x_max if none does.
const DIVERGENCE: f64 = 1e6;

/// Bisection stops when the energy bracket is this narrow.
const ENERGY_TOL: f64 = 1e-6;

/// How the integrated solution behaves at the end of the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// |ψ| crossed the divergence threshold at `x`.
    Diverged { sign: Sign, x: f64 },
    /// Reached x_max below threshold; `decayed` marks a clear bound-state
    /// profile (end value far below the interior peak).
    AtEnd { sign: Sign, decayed: bool },
}

impl Tail {
    pub fn sign(self) -> Sign {
        match self {
            Tail::Diverged { sign, .. } => sign,
            Tail::AtEnd { sign, .. } => sign,
        }
    }
}

/// A bound-state search problem for an even potential on the half line.
pub struct ShootingProblem {
    v: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub parity: Parity,
    pub x_max: f64,
    pub dx: f64,
    pub bracket: (f64, f64),
}

impl ShootingProblem {
    /// Checks the even-symmetry of V (sampled) and that the grid reaches
    /// deep enough into the forbidden region: V(x_max) − E_hi ≥ 10.
    pub fn new(
        v: impl Fn(f64) -> f64 + Send + Sync + 'static,
        parity: Parity,
        x_max: f64,
        dx: f64,
        bracket: (f64, f64),
    ) -> Result<Self> {
        for i in 1..8 {
            let x = x_max * i as f64 / 8.0;
            let asym = (v(x) - v(-x)).abs();
            if asym > 1e-12 * (1.0 + v(x).abs()) {
                return Err(Error::Domain(format!(
                    "potential is not even: |V({x}) − V(−{x})| = {asym:e}"
                )));
            }
        }
        if v(x_max) - bracket.1 < 10.0 {
            return Err(Error::Domain(format!(
                "x_max too small: V(x_max) − E_hi = {}",
                v(x_max) - bracket.1
            )));
        }
        if !(dx > 0.0) || bracket.0 >= bracket.1 {
            return Err(Error::Domain("need dx > 0 and a proper bracket".into()));
        }
        Ok(Self {
            v: Box::new(v),
            parity,
            x_max,
            dx,
            bracket,
        })
    }

    /// Picks x_max so that V(x_max) − E ≥ 50, matching the decay scale of
    /// the quartic wells handled here.
    pub fn auto_x_max(v: impl Fn(f64) -> f64, e_hi: f64) -> Result<f64> {
        let mut x = 0.5;
        while v(x) - e_hi < 50.0 {
            x += 0.05;
            if x > 200.0 {
                return Err(Error::Inconclusive(
                    "potential never climbs 50 above the bracket".into(),
                ));
            }
        }
        Ok(x)
    }

    pub fn potential(&self, x: f64) -> f64 {
        (self.v)(x)
    }

    fn start_data(&self) -> (f64, f64) {
        match self.parity {
            Parity::Even => (1.0, 0.0),
            Parity::Odd => (0.0, 1.0),
        }
    }

    /// Integrates at energy `e` and classifies the tail.
    pub fn divergence_sign(&self, e: f64) -> Result<Tail> {
        let grid = GridSpec::half_line(self.x_max, self.dx);
        let (psi0, dpsi0) = self.start_data();
        match numerov_integrate(&self.v, e, grid, psi0, dpsi0) {
            Err(Error::Divergence { sign, x }) => Ok(Tail::Diverged {
                sign: if sign >= 0 { Sign::Positive } else { Sign::Negative },
                x,
            }),
            Err(e) => Err(e),
            Ok(psi) => {
                let mut peak = 0.0_f64;
                for (x, v) in psi.points() {
                    if v.abs() > DIVERGENCE {
                        return Ok(Tail::Diverged {
                            sign: Sign::of(v),
                            x,
                        });
                    }
                    peak = peak.max(v.abs());
                }
                let last = psi.value(psi.len() - 1);
                if last == 0.0 || !last.is_finite() {
                    return Err(Error::Inconclusive(format!(
                        "tail value {last} at x_max carries no usable sign"
                    )));
                }
                Ok(Tail::AtEnd {
                    sign: Sign::of(last),
                    decayed: last.abs() <= 1e-2 * peak,
                })
            }
        }
    }

    /// Interior nodes (sign changes) of the solution at energy `e`,
    /// counted on the classically allowed region [0, x_turn] where the
    /// eigenfunction's nodes live. The half line excludes the symmetry
    /// node of odd states at x = 0.
    pub fn node_count(&self, e: f64) -> Result<usize> {
        let grid = GridSpec::half_line(self.x_max, self.dx);
        let (psi0, dpsi0) = self.start_data();
        let psi = match numerov_integrate(&self.v, e, grid, psi0, dpsi0) {
            Ok(psi) => psi,
            Err(Error::Divergence { x, .. }) => {
                // divergence happens deep in the forbidden region; re-run on
                // the truncated grid, which still covers the allowed region
                let shorter = GridSpec::half_line(x - 2.0 * self.dx, self.dx);
                numerov_integrate(&self.v, e, shorter, psi0, dpsi0)?
            }
            Err(err) => return Err(err),
        };
        let mut x_turn = self.x_max;
        let mut x = self.x_max;
        while x > 0.0 {
            if (self.v)(x) <= e {
                x_turn = x;
                break;
            }
            x -= self.dx * 10.0;
        }
        let limit = (x_turn + 0.1).min(psi.x_end());
        let mut count = 0;
        let mut prev = psi.value(0);
        for (x, v) in psi.points().skip(1) {
            if x > limit {
                break;
            }
            if prev * v < 0.0 {
                count += 1;
            }
            if v != 0.0 {
                prev = v;
            }
        }
        Ok(count)
    }

    /// Bisects the divergence sign down to a bracket of width ≤ 1e-6 and
    /// verifies the node count of the converged solution.
    pub fn find_level(&self, node_target: usize) -> Result<f64> {
        let (mut lo, mut hi) = self.bracket;
        let sign_lo = self.divergence_sign(lo)?.sign();
        let sign_hi = self.divergence_sign(hi)?.sign();
        if sign_lo == sign_hi {
            return Err(Error::Bracket { lo, hi });
        }
        while hi - lo > ENERGY_TOL {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.divergence_sign(mid)?.sign() == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let e = 0.5 * (lo + hi);
        let measured = self.node_count(e)?;
        if measured != node_target {
            return Err(Error::MislabeledLevel {
                expected: node_target,
                measured,
            });
        }
        Ok(e)
    }
}

/// Excited levels of V± = g²x⁴ ± 2g|x| by shooting, seeded from the m = 10
/// variational energies (scaled by g^{2/3}) with brackets ±0.5 around each
/// seed. Variational values are upper bounds, so a bracket that misses is
/// widened downward until the sign change appears.
///
/// For the minus sector the returned levels are E⁻₁..E⁻_count (the exact
/// E⁻₀ = 0 needs no shooting); for the plus sector E⁺₀..E⁺_{count−1}.
pub fn eps_x2_levels(sector: Sector, g: f64, count: usize, dx: f64) -> Result<Vec<f64>> {
    if !(g > 0.0) {
        return Err(Error::Domain(format!("need g > 0, got {g}")));
    }
    if count == 0 || count > 7 {
        return Err(Error::Domain(
            "supported level counts are 1..=7 (the m = 10 basis seeds no more)".into(),
        ));
    }
    let seeds = eps_x2_energies(sector, 10)?;
    let pair = partner_potentials(&Superpotential::SignMonomial { g, n: 1 });
    let scale = g.powf(2.0 / 3.0);

    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        // the table row: minus-sector levels start at n = 1
        let level = match sector {
            Sector::Minus => idx + 1,
            Sector::Plus => idx,
        };
        let seed = scale * seeds[level];
        let parity = if level % 2 == 0 { Parity::Even } else { Parity::Odd };
        let mut lo = seed - 0.5 * scale;
        let hi = seed + 0.5 * scale;
        let x_max = ShootingProblem::auto_x_max(|x| pair.v(sector, x), hi)?;
        let floor = out.last().copied().unwrap_or(0.0);
        loop {
            let problem = ShootingProblem::new(
                {
                    let pair = pair.clone();
                    move |x| pair.v(sector, x)
                },
                parity,
                x_max,
                dx,
                (lo, hi),
            )?;
            match problem.find_level(level / 2) {
                Ok(e) => {
                    out.push(e);
                    break;
                }
                Err(Error::Bracket { .. }) if lo > floor => {
                    // variational seeds overestimate; search lower
                    lo = (lo - 0.25 * scale).max(floor);
                }
                Err(err) => return Err(err),
            }
        }
    }
    Ok(out)
}
