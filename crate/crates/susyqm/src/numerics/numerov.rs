//! Fourth-order Numerov integration of −ψ″ + (V − E)ψ = 0.

use crate::error::Error;
use crate::numerics::grid::{GridFunction, GridSpec};
use crate::Result;

/// Hard overflow guard; integration stops with a divergence signal well
/// before f64 overflow so the last sign is meaningful.
const OVERFLOW: f64 = 1e250;

/// Integrates −ψ″ + (V(x) − E)ψ = 0 across `grid` from initial data
/// (ψ, ψ′) at the first grid point. Fourth-order accurate.
///
/// A solution that outgrows the overflow guard aborts with
/// [`Error::Divergence`] carrying the sign of the last finite sample.
pub fn numerov_integrate<V: Fn(f64) -> f64>(
    v: V,
    e: f64,
    grid: GridSpec,
    psi_start: f64,
    dpsi_start: f64,
) -> Result<GridFunction> {
    if grid.n < 2 {
        return Err(Error::InvalidGrid("Numerov needs at least 2 points".into()));
    }
    let h = grid.dx;
    let q = |x: f64| v(x) - e;

    let mut values = Vec::with_capacity(grid.n);
    values.push(psi_start);
    values.push(taylor_seed(&q, grid.x0, h, psi_start, dpsi_start));

    let h2 = h * h;
    let weight = |x: f64| 1.0 - h2 * q(x) / 12.0;

    for i in 1..grid.n - 1 {
        let xm = grid.x(i - 1);
        let xi = grid.x(i);
        let xp = grid.x(i + 1);
        let next =
            (2.0 * (1.0 + 5.0 * h2 * q(xi) / 12.0) * values[i] - weight(xm) * values[i - 1])
                / weight(xp);
        if !next.is_finite() || next.abs() > OVERFLOW {
            let sign = if values[i] >= 0.0 { 1 } else { -1 };
            return Err(Error::Divergence { sign, x: xp });
        }
        values.push(next);
    }
    GridFunction::new(grid.x0, grid.dx, values)
}

// Taylor start through O(h⁴), with q′ and q″ estimated by differences.
// For parity starts at x = 0 on even potentials the central estimates are
// exactly the symmetrized derivatives, which is what the even/odd solution
// needs across an |x|-type kink.
fn taylor_seed<Q: Fn(f64) -> f64>(q: &Q, x0: f64, h: f64, psi: f64, dpsi: f64) -> f64 {
    let q0 = q(x0);
    let qp = q(x0 + h);
    let qm = q(x0 - h);
    let (dq, ddq) = if qm.is_finite() {
        ((qp - qm) / (2.0 * h), (qp - 2.0 * q0 + qm) / (h * h))
    } else {
        // one-sided fallback for domain edges (e.g. radial grids)
        ((qp - q0) / h, 0.0)
    };
    let d2 = q0 * psi;
    let d3 = dq * psi + q0 * dpsi;
    let d4 = ddq * psi + 2.0 * dq * dpsi + q0 * q0 * psi;
    psi + h * dpsi + h * h / 2.0 * d2 + h.powi(3) / 6.0 * d3 + h.powi(4) / 24.0 * d4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sho_ground_state_decays() {
        // V = x², E = 1: exact even solution e^{−x²/2} in ħ = 2m = ω = 1
        let grid = GridSpec::half_line(4.0, 1e-3);
        let psi = numerov_integrate(|x| x * x, 1.0, grid, 1.0, 0.0).unwrap();
        let last = psi.value(psi.len() - 1);
        assert!(last.abs() < 1e-3, "should decay, got {last}");
        assert!(psi.values().iter().all(|v| v.abs() <= 1.0 + 1e-12));
    }

    #[test]
    fn sho_reproduces_gaussian_to_1e6() {
        let grid = GridSpec::half_line(3.0, 1e-3);
        let psi = numerov_integrate(|x| x * x, 1.0, grid, 1.0, 0.0).unwrap();
        let mut worst = 0.0_f64;
        for (x, v) in psi.points() {
            let exact = (-0.5 * x * x).exp();
            worst = worst.max((v - exact).abs() / exact);
        }
        assert!(worst < 1e-6, "max relative deviation {worst}");
    }

    #[test]
    fn below_ground_energy_diverges_with_fixed_sign() {
        // E = 0.5 < E₀ = 1: solution blows up toward +∞ on both sides
        let grid = GridSpec::half_line(8.0, 1e-3);
        match numerov_integrate(|x| x * x, 0.5, grid, 1.0, 0.0) {
            Ok(psi) => {
                let last = psi.value(psi.len() - 1);
                assert!(last > 1.0, "expected positive divergence, got {last}");
            }
            Err(Error::Divergence { sign, .. }) => assert_eq!(sign, 1),
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn zero_energy_quartic_sign_monomial_state() {
        // V = x⁴ − 2|x| at E = 0 has the exact node-free solution e^{−|x|³/3}
        let grid = GridSpec::half_line(3.0, 1e-3);
        let v = |x: f64| x.powi(4) - 2.0 * x.abs();
        let psi = numerov_integrate(v, 0.0, grid, 1.0, 0.0).unwrap();
        let mut worst = 0.0_f64;
        for (x, val) in psi.points() {
            let exact = (-x.abs().powi(3) / 3.0).exp();
            worst = worst.max((val - exact).abs() / exact);
        }
        assert!(worst < 1e-5, "max relative deviation {worst}");
    }

    #[test]
    fn odd_start_tracks_sho_first_excited() {
        // V = x², E = 3: exact odd solution ∝ x·e^{−x²/2}
        let grid = GridSpec::half_line(2.0, 1e-3);
        let psi = numerov_integrate(|x| x * x, 3.0, grid, 0.0, 1.0).unwrap();
        let mut worst = 0.0_f64;
        for (x, v) in psi.points() {
            if x < 0.2 {
                continue;
            }
            let exact = x * (-0.5 * x * x).exp();
            worst = worst.max((v - exact).abs() / exact.abs());
        }
        assert!(worst < 1e-5, "max relative deviation {worst}");
    }
}
