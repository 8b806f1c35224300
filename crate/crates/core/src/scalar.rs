//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// A real floating-point scalar (`f32` or `f64`) together with the
/// precision-dependent tolerances the algorithms use.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Jacobi stops once the off-diagonal Frobenius norm drops below this
    /// fraction of the input's Frobenius norm.
    const JACOBI_REL_TOL: Self;
    /// Allowed Hermitian deviation, relative to `1 + max |entry|`.
    const HERMITIAN_REL_TOL: Self;
    /// Allowed imaginary residue of a polynomial that must be real,
    /// relative to `1 + |real part|`.
    const REAL_COEF_TOL: Self;
    /// Absolute tolerance for structural zero checks on constructed inputs.
    const PATTERN_TOL: Self;
    /// Two boundary points closer than this are the same vertex.
    const VERTEX_MERGE_TOL: Self;

    /// Lossless-enough conversion from an `f64` literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("usize representable")
    }
}

impl Real for f64 {
    const JACOBI_REL_TOL: Self = 1e-12;
    const HERMITIAN_REL_TOL: Self = 1e-9;
    const REAL_COEF_TOL: Self = 1e-9;
    const PATTERN_TOL: Self = 1e-12;
    const VERTEX_MERGE_TOL: Self = 1e-9;
}

impl Real for f32 {
    const JACOBI_REL_TOL: Self = 1e-6;
    const HERMITIAN_REL_TOL: Self = 1e-4;
    const REAL_COEF_TOL: Self = 1e-4;
    const PATTERN_TOL: Self = 1e-6;
    const VERTEX_MERGE_TOL: Self = 1e-4;
}
