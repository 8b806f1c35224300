use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian: deviation {deviation:e} exceeds {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("entry ({row}, {col}) lies outside the almost-tridiagonal pattern")]
    NotAlmostTridiagonal { row: usize, col: usize },
    #[error("matrix of size {size} is too small, need at least {min}")]
    TooSmall { size: usize, min: usize },
    #[error("imaginary residue {residue:e} in a polynomial that must be real")]
    ImaginaryResidue { residue: f64 },
    #[error("support profile is inconsistent: half-plane intersection is empty")]
    EmptyIntersection,
    #[error("invalid support profile: {0}")]
    InvalidProfile(String),
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
