//! Finite-truncation realization of the supersymmetric oscillator: bosonic
//! ladder operators on a truncated Fock space tensored with the two-level
//! fermionic space, supercharges Q = a†b, Q† = b†a and H = a†a + b†b.
//!
//! Basis ordering is |n,m⟩ ↦ n + N·m with n ∈ [0, N) bosonic and
//! m ∈ {0,1} fermionic, so H is diagonal with entries n + m.

use crate::error::Error;
use crate::numerics::matrix::DenseMatrix;
use crate::Result;

/// The operator set of the truncated supersymmetric oscillator.
#[derive(Debug, Clone)]
pub struct FockOperators {
    pub n_max: usize,
    pub a: DenseMatrix,
    pub a_dag: DenseMatrix,
    pub b: DenseMatrix,
    pub b_dag: DenseMatrix,
    pub q: DenseMatrix,
    pub q_dag: DenseMatrix,
    pub h: DenseMatrix,
}

impl FockOperators {
    /// Index of the basis state |n, m⟩.
    pub fn index(&self, n: usize, m: usize) -> usize {
        n + self.n_max * m
    }

    /// Basis vector for |n, m⟩.
    pub fn basis_state(&self, n: usize, m: usize) -> Vec<f64> {
        let mut v = vec![0.0; 2 * self.n_max];
        v[self.index(n, m)] = 1.0;
        v
    }
}

/// Builds a, a†, b, b†, Q = a†b, Q† = b†a and H = a†a + b†b at bosonic
/// truncation `n_max`.
pub fn build_operators(n_max: usize) -> Result<FockOperators> {
    if n_max < 2 {
        return Err(Error::Domain(format!("need N_max ≥ 2, got {n_max}")));
    }
    let dim = 2 * n_max;
    let idx = |n: usize, m: usize| n + n_max * m;

    let mut a = DenseMatrix::zeros(dim);
    let mut a_dag = DenseMatrix::zeros(dim);
    for m in 0..2 {
        for n in 1..n_max {
            // a|n⟩ = √n |n−1⟩ and a†|n−1⟩ = √n |n⟩
            a[(idx(n - 1, m), idx(n, m))] = (n as f64).sqrt();
            a_dag[(idx(n, m), idx(n - 1, m))] = (n as f64).sqrt();
        }
    }

    let mut b = DenseMatrix::zeros(dim);
    let mut b_dag = DenseMatrix::zeros(dim);
    for n in 0..n_max {
        b[(idx(n, 0), idx(n, 1))] = 1.0; // b|n,1⟩ = |n,0⟩
        b_dag[(idx(n, 1), idx(n, 0))] = 1.0; // b†|n,0⟩ = |n,1⟩
    }

    let q = a_dag.mul(&b);
    let q_dag = b_dag.mul(&a);
    let h = a_dag.mul(&a).add(&b_dag.mul(&b));

    Ok(FockOperators {
        n_max,
        a,
        a_dag,
        b,
        b_dag,
        q,
        q_dag,
        h,
    })
}

/// Result of verifying the super-algebra on the truncation-safe block.
#[derive(Debug, Clone)]
pub struct AlgebraReport {
    pub n_max: usize,
    /// max |({Q,Q†} − H)_{ij}| over the safe block
    pub max_qqdag_vs_h: f64,
    /// max |(Q²)_{ij}| over the full space (nilpotency holds everywhere)
    pub max_q_squared: f64,
    /// max |([Q,H])_{ij}| over the safe block
    pub max_q_h_commutator: f64,
    /// (level k, multiplicity) for levels inside the safe block
    pub degeneracies: Vec<(usize, usize)>,
}

const TOL: f64 = 1e-12;

/// Verifies {Q,Q†} = H, Q² = 0 and [Q,H] = 0 on the subspace n ≤ N_max − 2.
///
/// Rows and columns touching n = N_max − 1 are excluded (except for the Q²
/// check) because a†a is not faithful on the truncation boundary.
pub fn check_superalgebra(n_max: usize) -> Result<AlgebraReport> {
    if n_max < 3 {
        return Err(Error::Domain(format!("need N_max ≥ 3, got {n_max}")));
    }
    let ops = build_operators(n_max)?;
    let safe = |i: usize| i % n_max <= n_max - 2;

    let qqdag_vs_h = ops.q.anticommutator(&ops.q_dag).sub(&ops.h);
    let q_squared = ops.q.mul(&ops.q);
    let qh = ops.q.commutator(&ops.h);

    let max_on_safe = |m: &DenseMatrix| {
        let mut worst = 0.0_f64;
        for i in 0..m.size() {
            for j in 0..m.size() {
                if safe(i) && safe(j) {
                    worst = worst.max(m[(i, j)].abs());
                }
            }
        }
        worst
    };

    let report = AlgebraReport {
        n_max,
        max_qqdag_vs_h: max_on_safe(&qqdag_vs_h),
        max_q_squared: q_squared.max_abs(),
        max_q_h_commutator: max_on_safe(&qh),
        degeneracies: degeneracies(&ops),
    };

    if report.max_qqdag_vs_h > TOL || report.max_q_squared > TOL || report.max_q_h_commutator > TOL
    {
        let mut offending = Vec::new();
        for (name, m, full) in [
            ("{Q,Q†}−H", &qqdag_vs_h, false),
            ("Q²", &q_squared, true),
            ("[Q,H]", &qh, false),
        ] {
            for i in 0..m.size() {
                for j in 0..m.size() {
                    if (full || (safe(i) && safe(j))) && m[(i, j)].abs() > TOL {
                        offending.push(format!("{name}[{i},{j}] = {:e}", m[(i, j)]));
                    }
                }
            }
        }
        return Err(Error::AlgebraViolation(offending.join("; ")));
    }
    Ok(report)
}

// H is diagonal with entries n + m; count multiplicities for levels whose
// members all sit inside the safe block (k ≤ N_max − 2).
fn degeneracies(ops: &FockOperators) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 0..=ops.n_max - 2 {
        let mut count = 0;
        for m in 0..2usize {
            if k >= m {
                let n = k - m;
                if n <= ops.n_max - 2 {
                    count += 1;
                }
            }
        }
        out.push((k, count));
    }
    out
}
