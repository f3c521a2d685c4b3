//! Self-contained numerical kernel: special functions, adaptive quadrature,
//! Numerov ODE integration, bisection, and a symmetric-definite generalized
//! eigensolver. No external numerical dependencies; everything here is pure
//! and reentrant.

pub mod bisect;
pub mod grid;
pub mod matrix;
pub mod numerov;
pub mod pencil;
pub mod quad;
pub mod special;

pub use bisect::{bisect, Sign};
pub use grid::{GridFunction, GridSpec};
pub use numerov::numerov_integrate;
pub use pencil::{solve_pencil, EigenPair, MatrixPencil};
pub use quad::integrate;
pub use special::{digamma, gamma_fn};
