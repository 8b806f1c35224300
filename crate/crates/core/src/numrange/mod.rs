//! Support functions and boundary shapes of `closure W(T)`, plus the
//! independent spectral oracles used to cross-check them.

mod oracle;
mod shape;
mod support;
mod witness;

pub use oracle::{
    oracle_matrix_support, oracle_symbol_support, oracle_truncation_support, SymbolOracle, TruncationOracle,
};
pub use shape::{boundary_shape, BoundaryShape, ShapeKind};
pub use support::{support, support_profile, uniform_angles, SupportFunction, SupportProfile};
pub use witness::explicit_matrix_2periodic;
