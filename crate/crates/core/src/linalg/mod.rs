//! Dense complex linear algebra and real-rooted polynomial root finding.

mod matrix;
mod poly;

pub use matrix::{tridiagonal_max_eigenvalue, ComplexMatrix};
pub use poly::RealPoly;
