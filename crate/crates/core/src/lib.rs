//! Closure of the numerical range of periodic tridiagonal operators.
//!
//! An `(n+1)`-periodic tridiagonal operator `T(a, b, c)` on `ℓ²(ℕ₀)` has a
//! closed numerical range whose support function in direction θ is the
//! largest real root of `P(t, -cos θ, -sin θ)` for a hyperbolic polynomial
//! `P` of degree `2(n+1)` built from the period words. This crate assembles
//! `P` exactly, evaluates the support function, reconstructs the boundary,
//! and provides independent spectral oracles (symbol family sampling,
//! finite sections, explicit witness matrices) to cross-check it.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the `*F64`
//! aliases below fix the double-precision instantiation used by the CLI.
//!
//! ```
//! use numrange::{CouplingForms, Operator, SupportFunction};
//!
//! let op = Operator::from_real(&[1.0, 3.0], &[0.0, 0.0], &[4.0, 8.0]).unwrap();
//! let h = SupportFunction::new(&op.coupling_forms()).unwrap();
//! assert!((h.value(0.0).unwrap() - 8.0).abs() < 1e-10);
//! # let _: CouplingForms<f64> = op.coupling_forms();
//! ```

// `!(a < b)` is used deliberately where NaN must fail the test.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod kippenhahn;
pub mod linalg;
pub mod numrange;
pub mod operator;
pub mod scalar;

pub use error::{Error, Result};
pub use kippenhahn::{
    almost_tridiag_det, factor_g, factor_h, kippenhahn_of_symbol, pencil_entries, range_polynomial, uv_forms,
    LinearForm3, Pencil, PolyJson, TermJson, TriPoly, UvForms,
};
pub use linalg::{ComplexMatrix, RealPoly};
pub use numrange::{
    boundary_shape, explicit_matrix_2periodic, oracle_matrix_support, oracle_symbol_support, oracle_truncation_support,
    support, support_profile, BoundaryShape, ShapeKind, SupportFunction, SupportProfile, SymbolOracle,
    TruncationOracle,
};
pub use operator::{CouplingForms, PeriodicTridiagonal};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;

pub type Operator = PeriodicTridiagonal<f64>;
pub type CouplingFormsF64 = CouplingForms<f64>;
pub type MatrixF64 = ComplexMatrix<f64>;
pub type RealPolyF64 = RealPoly<f64>;
pub type TriPolyF64 = TriPoly<f64>;
pub type SupportProfileF64 = SupportProfile<f64>;
pub type BoundaryShapeF64 = BoundaryShape<f64>;

pub type OperatorF32 = PeriodicTridiagonal<f32>;
pub type TriPolyF32 = TriPoly<f32>;
