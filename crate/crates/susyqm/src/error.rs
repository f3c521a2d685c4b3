use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A grid violated its invariants (empty, dx ≤ 0, non-finite samples).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Two grid functions were combined but live on different grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// Adaptive quadrature hit its depth cap; carries the best estimate.
    #[error("quadrature did not reach tolerance (best estimate {best})")]
    Accuracy { best: f64 },

    /// The overlap matrix of a pencil is not positive definite.
    #[error("matrix pencil is ill-conditioned: {0}")]
    Conditioning(String),

    /// A pencil matrix failed its symmetry check.
    #[error("matrix not symmetric: {0}")]
    NotSymmetric(String),

    /// Numerov integration overflowed; carries the sign of the last sample.
    #[error("solution diverged (sign {sign:+}) at x = {x}")]
    Divergence { sign: i8, x: f64 },

    /// Bisection was asked to start from a bracket without a sign change.
    #[error("no sign change on bracket [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    /// Requested a zero mode of a superpotential with broken supersymmetry.
    #[error("supersymmetry is broken for this superpotential: {0}")]
    BrokenSusy(String),

    /// Central differences requested on a grid too coarse to trust.
    #[error("grid too coarse for finite differences (dx = {dx} > 0.1)")]
    GridTooCoarse { dx: f64 },

    /// The plus sector has no state paired with the requested level.
    #[error("no partner state: {0}")]
    NoPartner(String),

    /// Scattering energy at or below the continuum threshold g².
    #[error("energy {e} is not above the threshold g² = {threshold}")]
    SubThreshold { e: f64, threshold: f64 },

    /// The delta barrier binds nothing.
    #[error("the plus sector (barrier) has no bound state")]
    NoBoundState,

    /// Shooting converged onto a state with the wrong node count.
    #[error("level mislabeled: expected {expected} nodes, measured {measured}")]
    MislabeledLevel { expected: usize, measured: usize },

    /// Shooting could not classify the tail of the integrated solution.
    #[error("inconclusive shot: {0}")]
    Inconclusive(String),

    /// δ-expansion order-0 potential is not harmonic-plus-constant.
    #[error("unsupported order-0 baseline: {0}")]
    UnsupportedBaseline(String),

    /// Truncated δ-expansion exponent does not decay at the grid ends.
    #[error("truncated expansion is not normalizable at order {order}")]
    BrokenTruncation { order: usize },

    /// Super-algebra identity violated beyond tolerance.
    #[error("super-algebra violation: {0}")]
    AlgebraViolation(String),

    /// Frobenius series overflowed before reaching the requested index.
    #[error("series overflow at index {index}")]
    SeriesOverflow { index: usize },
}
