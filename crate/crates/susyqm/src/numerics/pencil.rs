//! Symmetric-definite generalized eigenproblem H·α = E·S·α.
//!
//! S is reduced by Cholesky (S = L·Lᵀ) and the congruent symmetric matrix
//! L⁻¹·H·L⁻ᵀ is diagonalized by cyclic Jacobi rotations — robustness over
//! speed, which is the right trade for pencils of size m ≲ 20.

use crate::error::Error;
use crate::numerics::matrix::DenseMatrix;
use crate::Result;

/// The pair of symmetric matrices (S, H) of a Rayleigh–Ritz problem:
/// S_ij = ⟨f_i|f_j⟩ and H_ij = ⟨f_i|H|f_j⟩.
#[derive(Debug, Clone)]
pub struct MatrixPencil {
    size: usize,
    s: DenseMatrix,
    h: DenseMatrix,
}

/// One generalized eigenpair; `coeffs` is normalized so αᵀ·S·α = 1.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: f64,
    pub coeffs: Vec<f64>,
}

impl MatrixPencil {
    /// Validates symmetry of both matrices (relative tolerance 1e-12) and
    /// positive definiteness of S via a trial Cholesky factorization.
    pub fn new(s: DenseMatrix, h: DenseMatrix) -> Result<Self> {
        let size = s.size();
        if size == 0 || h.size() != size {
            return Err(Error::Conditioning(format!(
                "size mismatch: S is {}, H is {}",
                size,
                h.size()
            )));
        }
        check_symmetric(&s, "S")?;
        check_symmetric(&h, "H")?;
        if s.cholesky().is_none() {
            return Err(Error::Conditioning(
                "S is not positive definite (basis not linearly independent)".into(),
            ));
        }
        Ok(Self { size, s, h })
    }

    pub fn from_fns<FS, FH>(m: usize, s: FS, h: FH) -> Result<Self>
    where
        FS: Fn(usize, usize) -> f64,
        FH: Fn(usize, usize) -> f64,
    {
        Self::new(DenseMatrix::from_fn(m, s), DenseMatrix::from_fn(m, h))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn s(&self) -> &DenseMatrix {
        &self.s
    }

    pub fn h(&self) -> &DenseMatrix {
        &self.h
    }

    /// Largest residual ‖H·α − E·S·α‖₂ scaled by ‖H‖·‖α‖, for diagnostics.
    pub fn residual(&self, pair: &EigenPair) -> f64 {
        let ha = self.h.matvec(&pair.coeffs);
        let sa = self.s.matvec(&pair.coeffs);
        let num: f64 = ha
            .iter()
            .zip(&sa)
            .map(|(h, s)| (h - pair.value * s).powi(2))
            .sum::<f64>()
            .sqrt();
        let alpha: f64 = pair.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt();
        num / (self.h.max_abs().max(f64::MIN_POSITIVE) * alpha)
    }
}

fn check_symmetric(m: &DenseMatrix, name: &str) -> Result<()> {
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    for i in 0..m.size() {
        for j in i + 1..m.size() {
            let d = (m[(i, j)] - m[(j, i)]).abs();
            if d > 1e-12 * scale {
                return Err(Error::NotSymmetric(format!(
                    "{name}[{i},{j}] − {name}[{j},{i}] = {d:e}"
                )));
            }
        }
    }
    Ok(())
}

/// Solves the pencil, returning all eigenpairs in ascending eigenvalue
/// order with S-normalized coefficient vectors.
pub fn solve_pencil(p: &MatrixPencil) -> Result<Vec<EigenPair>> {
    let n = p.size;
    let l = p
        .s
        .cholesky()
        .ok_or_else(|| Error::Conditioning("S is not positive definite".into()))?;

    // C = L⁻¹ H L⁻ᵀ, built column by column and symmetrized
    let mut c = DenseMatrix::zeros(n);
    for j in 0..n {
        let hj = p.h.column(j);
        let yj = l.forward_solve(&hj); // y = L⁻¹ h_j
        for i in 0..n {
            c[(i, j)] = yj[i];
        }
    }
    // now c = L⁻¹ H; apply L⁻¹ from the right via transposed rows
    let ct = c.transpose();
    let mut cc = DenseMatrix::zeros(n);
    for j in 0..n {
        let col = ct.column(j);
        let y = l.forward_solve(&col);
        for i in 0..n {
            cc[(i, j)] = y[i];
        }
    }
    let sym = cc.add(&cc.transpose()).scale(0.5);

    let (values, vectors) = sym.jacobi_eigen();
    let pairs = (0..n)
        .map(|k| {
            let y = vectors.column(k);
            let alpha = l.back_solve_transposed(&y); // α = L⁻ᵀ y, so αᵀSα = yᵀy = 1
            EigenPair {
                value: values[k],
                coeffs: alpha,
            }
        })
        .collect();
    Ok(pairs)
}
