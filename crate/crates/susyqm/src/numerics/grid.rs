//! Uniformly sampled real functions: the common currency between the
//! integrators, the SUSY operators and the spectrum solvers.

use crate::error::Error;
use crate::Result;

/// Description of a uniform grid: `n` points starting at `x0`, spaced `dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x0: f64,
    pub dx: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn new(x0: f64, dx: f64, n: usize) -> Self {
        Self { x0, dx, n }
    }

    /// Symmetric grid on [−x_max, x_max] with x = 0 exactly on a sample.
    ///
    /// Sign-function superpotentials and |x| kinks are only handled cleanly
    /// when the origin is a grid point, so the half-width is rounded to an
    /// integer number of steps.
    pub fn symmetric(x_max: f64, dx: f64) -> Self {
        let half = (x_max / dx).round().max(1.0) as usize;
        Self {
            x0: -(half as f64) * dx,
            dx,
            n: 2 * half + 1,
        }
    }

    /// Half-line grid on [0, x_max] starting exactly at 0.
    pub fn half_line(x_max: f64, dx: f64) -> Self {
        let steps = (x_max / dx).round().max(1.0) as usize;
        Self {
            x0: 0.0,
            dx,
            n: steps + 1,
        }
    }

    /// Radial grid on [dx, r_max]; never samples r = 0.
    pub fn radial(r_max: f64, dx: f64) -> Self {
        let steps = (r_max / dx).round().max(2.0) as usize;
        Self {
            x0: dx,
            dx,
            n: steps,
        }
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.dx * i as f64
    }

    pub fn x_end(&self) -> f64 {
        self.x(self.n - 1)
    }
}

/// A real function sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    x0: f64,
    dx: f64,
    values: Vec<f64>,
}

impl GridFunction {
    /// Builds a grid function, enforcing the type invariants: non-empty,
    /// positive spacing, all samples finite.
    pub fn new(x0: f64, dx: f64, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidGrid("no samples".into()));
        }
        if !(dx > 0.0) || !dx.is_finite() || !x0.is_finite() {
            return Err(Error::InvalidGrid(format!("bad geometry x0={x0}, dx={dx}")));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "non-finite sample {} at index {i}",
                values[i]
            )));
        }
        Ok(Self { x0, dx, values })
    }

    /// Samples `f` on the given grid.
    pub fn sample<F: Fn(f64) -> f64>(spec: GridSpec, f: F) -> Result<Self> {
        let values = (0..spec.n).map(|i| f(spec.x(i))).collect();
        Self::new(spec.x0, spec.dx, values)
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: non-empty
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.dx * i as f64
    }

    pub fn x_end(&self) -> f64 {
        self.x(self.len() - 1)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn spec(&self) -> GridSpec {
        GridSpec::new(self.x0, self.dx, self.len())
    }

    /// Iterator over (x, value) pairs.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.x(i), v))
    }

    /// Index of the sample closest to `x`; `None` outside the grid.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let t = (x - self.x0) / self.dx;
        if t < -0.5 || t > self.len() as f64 - 0.5 {
            return None;
        }
        Some((t.round() as usize).min(self.len() - 1))
    }

    /// Linear interpolation, clamped to the end values outside the grid.
    pub fn interp(&self, x: f64) -> f64 {
        let t = (x - self.x0) / self.dx;
        if t <= 0.0 {
            return self.values[0];
        }
        let last = self.len() - 1;
        if t >= last as f64 {
            return self.values[last];
        }
        let i = t.floor() as usize;
        let frac = t - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    /// Four-point (cubic) Lagrange interpolation; falls back to linear at
    /// the edges. Used where O(dx²) interpolation error is too coarse.
    pub fn interp_cubic(&self, x: f64) -> f64 {
        let n = self.len();
        if n < 4 {
            return self.interp(x);
        }
        let t = (x - self.x0) / self.dx;
        if t < 1.0 || t > (n - 2) as f64 {
            return self.interp(x);
        }
        let i = (t.floor() as usize).clamp(1, n - 3);
        let s = t - i as f64; // in [0, 1] between nodes i and i+1
        let (f0, f1, f2, f3) = (
            self.values[i - 1],
            self.values[i],
            self.values[i + 1],
            self.values[i + 2],
        );
        // Lagrange basis on nodes -1, 0, 1, 2 evaluated at s
        let a = -s * (s - 1.0) * (s - 2.0) / 6.0;
        let b = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
        let c = -(s + 1.0) * s * (s - 2.0) / 2.0;
        let d = (s + 1.0) * s * (s - 1.0) / 6.0;
        a * f0 + b * f1 + c * f2 + d * f3
    }

    /// dx-weighted trapezoid of ψ² (the squared L² norm).
    pub fn squared_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.len() - 1 {
            let a = self.values[i] * self.values[i];
            let b = self.values[i + 1] * self.values[i + 1];
            acc += 0.5 * (a + b) * self.dx;
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.squared_norm().sqrt()
    }

    /// Rescales so that the trapezoid of ψ² equals 1.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidGrid(format!("cannot normalize, norm = {n}")));
        }
        let values = self.values.iter().map(|v| v / n).collect();
        Self::new(self.x0, self.dx, values)
    }

    /// dx-weighted trapezoid of the product with another function on the
    /// same grid.
    pub fn inner(&self, other: &Self) -> Result<f64> {
        self.check_same_grid(other)?;
        let mut acc = 0.0;
        for i in 0..self.len() - 1 {
            let a = self.values[i] * other.values[i];
            let b = self.values[i + 1] * other.values[i + 1];
            acc += 0.5 * (a + b) * self.dx;
        }
        Ok(acc)
    }

    /// O(dx²) central-difference derivative on the interior points. The
    /// result lives on a grid shortened by one point at each end.
    pub fn derivative(&self) -> Result<Self> {
        if self.len() < 3 {
            return Err(Error::InvalidGrid("need ≥ 3 points to differentiate".into()));
        }
        let values = (1..self.len() - 1)
            .map(|i| (self.values[i + 1] - self.values[i - 1]) / (2.0 * self.dx))
            .collect();
        Self::new(self.x0 + self.dx, self.dx, values)
    }

    /// Central second difference on the interior points.
    pub fn second_derivative(&self) -> Result<Self> {
        if self.len() < 3 {
            return Err(Error::InvalidGrid("need ≥ 3 points to differentiate".into()));
        }
        let h2 = self.dx * self.dx;
        let values = (1..self.len() - 1)
            .map(|i| (self.values[i + 1] - 2.0 * self.values[i] + self.values[i - 1]) / h2)
            .collect();
        Self::new(self.x0 + self.dx, self.dx, values)
    }

    /// Number of strict sign changes between consecutive samples.
    pub fn node_count(&self) -> usize {
        self.values
            .windows(2)
            .filter(|w| w[0] * w[1] < 0.0)
            .count()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Applies `f` to every (x, value) pair.
    pub fn map<F: Fn(f64, f64) -> f64>(&self, f: F) -> Result<Self> {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| f(self.x(i), v))
            .collect();
        Self::new(self.x0, self.dx, values)
    }

    /// Restriction to the interior (drops `k` points at each end).
    pub fn trimmed(&self, k: usize) -> Result<Self> {
        if self.len() <= 2 * k {
            return Err(Error::InvalidGrid("trim exceeds grid".into()));
        }
        Self::new(
            self.x0 + self.dx * k as f64,
            self.dx,
            self.values[k..self.len() - k].to_vec(),
        )
    }

    pub fn check_same_grid(&self, other: &Self) -> Result<()> {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()));
        if self.len() != other.len() || !close(self.x0, other.x0) || !close(self.dx, other.dx) {
            return Err(Error::GridMismatch(format!(
                "({}, {}, {}) vs ({}, {}, {})",
                self.x0,
                self.dx,
                self.len(),
                other.x0,
                other.dx,
                other.len()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(GridFunction::new(0.0, 0.1, vec![]).is_err());
        assert!(GridFunction::new(0.0, -0.1, vec![1.0]).is_err());
        assert!(GridFunction::new(0.0, 0.1, vec![f64::NAN]).is_err());
        assert!(GridFunction::new(0.0, 0.1, vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn symmetric_grid_contains_origin() {
        let spec = GridSpec::symmetric(4.0, 1e-3);
        let mid = (spec.n - 1) / 2;
        assert_eq!(spec.x(mid), 0.0);
        assert!((spec.x_end() - 4.0).abs() < 1e-9);
    }

    #[test]
    fn gaussian_norm_is_one() {
        let spec = GridSpec::symmetric(8.0, 1e-3);
        let psi = GridFunction::sample(spec, |x| {
            (1.0 / std::f64::consts::PI).powf(0.25) * (-0.5 * x * x).exp()
        })
        .unwrap();
        assert!((psi.squared_norm() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn derivative_of_sine() {
        let spec = GridSpec::symmetric(3.0, 1e-3);
        let f = GridFunction::sample(spec, |x| x.sin()).unwrap();
        let df = f.derivative().unwrap();
        let err = df
            .points()
            .map(|(x, v)| (v - x.cos()).abs())
            .fold(0.0_f64, f64::max);
        assert!(err < 1e-6, "max derivative error {err}");
    }

    #[test]
    fn cubic_interpolation_beats_linear() {
        let spec = GridSpec::symmetric(2.0, 0.05);
        let f = GridFunction::sample(spec, |x| (x * 1.3).sin()).unwrap();
        let x = 0.512345;
        let exact = (x * 1.3f64).sin();
        assert!((f.interp_cubic(x) - exact).abs() < (f.interp(x) - exact).abs());
        assert!((f.interp_cubic(x) - exact).abs() < 1e-7);
    }

    #[test]
    fn node_count_of_sho_second_state() {
        let spec = GridSpec::symmetric(6.0, 1e-2);
        let f = GridFunction::sample(spec, |x| (2.0 * x * x - 1.0) * (-0.5 * x * x).exp()).unwrap();
        assert_eq!(f.node_count(), 2);
    }
}
