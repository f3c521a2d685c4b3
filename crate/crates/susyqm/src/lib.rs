//! Numerical laboratory for one-dimensional supersymmetric quantum mechanics.
//!
//! Everything works in units where ħ = 2m = 1, so the Schrödinger equation
//! reads −ψ″ + V ψ = E ψ and a superpotential W generates the partner pair
//! V∓ = W² ∓ W′ through the Riccati equation. The crate provides
//!
//! * a self-contained numerical kernel ([`numerics`]): gamma/digamma,
//!   adaptive quadrature on finite and infinite intervals, Numerov
//!   integration, bisection and a symmetric-definite generalized
//!   eigensolver;
//! * superpotential families, partner potentials, zero-energy ground
//!   states and the A/A† intertwiners ([`susy`]);
//! * a truncated-Fock realization of the supersymmetric oscillator
//!   algebra ([`superalgebra`]);
//! * hierarchies of Hamiltonians and shape-invariant spectra, with the
//!   hydrogen radial problem and the infinite-well partner worked in
//!   closed form ([`hierarchy`]);
//! * a Rayleigh–Ritz solver with closed-form matrix elements for the
//!   g·ε(x)x² problem ([`variational`]);
//! * logarithmic perturbation theory (δ-expansion) ([`lpt`]);
//! * a "wag the dog" shooting spectrum finder ([`shooting`]);
//! * delta-well/barrier scattering for W = g·ε(x) ([`scattering`]);
//! * Frobenius series for the triconfluent Heun reduction of the
//!   g·ε(x)x² problem ([`heun`]).

pub mod error;
pub mod numerics;

pub mod heun;
pub mod hierarchy;
pub mod lpt;
pub mod scattering;
pub mod shooting;
pub mod superalgebra;
pub mod susy;
pub mod variational;

pub use error::Error;
pub use numerics::grid::{GridFunction, GridSpec};
pub use numerics::pencil::MatrixPencil;
pub use susy::{Sector, Superpotential};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
