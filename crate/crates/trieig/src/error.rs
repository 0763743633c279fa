//! Error type shared across the crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the geometric, quadrature, certification and FEM layers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The three input points are (numerically) collinear.
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    /// A basis function was evaluated outside the closed triangle.
    #[error("point ({x}, {y}) lies outside the closed triangle")]
    OutsideDomain { x: f64, y: f64 },

    /// Successive quadrature orders failed to agree within tolerance.
    #[error("quadrature did not converge: {0}")]
    QuadratureNotConverged(String),

    /// A Rayleigh quotient was requested for the zero coefficient vector.
    #[error("coefficient vector is zero")]
    ZeroVector,

    /// The dense generalized eigenvalue solve did not converge.
    #[error("eigenvalue solve failed: {0}")]
    EigenSolveFailure(String),

    /// An operation was invoked for a region case it does not handle.
    #[error("method not applicable: {0}")]
    WrongCase(String),

    /// A root finder could not bracket a sign change.
    #[error("root not bracketed: {0}")]
    RootNotBracketed(String),

    /// The polynomial fit left a residual above the certification threshold.
    #[error("interpolation residual too large: {0}")]
    InterpolationResidualTooLarge(String),

    /// A region certificate failed; carries the offending point.
    #[error("certification of {case} failed at ({x}, {y}): {detail}")]
    CertificationFailed {
        case: &'static str,
        x: f64,
        y: f64,
        detail: String,
    },

    /// Mesh refinement level outside the supported range.
    #[error("refinement level {0} out of range (1..=9)")]
    LevelTooLarge(usize),

    /// The mesh has no interior vertices, so the Dirichlet problem is empty.
    #[error("mesh has no interior vertices")]
    NoInteriorVertices,

    /// Inverse iteration stopped making progress.
    #[error("eigenvalue iteration stalled: {0}")]
    IterationStalled(String),

    /// A computed eigenvalue escaped the certified bounds.
    #[error("bound violation: {0}")]
    BoundViolation(String),

    /// The FEM oracle declined a triangle outside its trust region.
    #[error("oracle refused: {0}")]
    OracleRefused(String),
}
