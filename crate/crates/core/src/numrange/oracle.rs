//! Independent routes to the support function, used to cross-check the
//! polynomial one.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::kippenhahn::{uv_forms, UvForms};
use crate::linalg::{tridiagonal_max_eigenvalue, ComplexMatrix};
use crate::operator::PeriodicTridiagonal;
use crate::scalar::Real;

/// `max Re(e^{-iθ} W(m))`, the top eigenvalue of `cos θ Re(m) + sin θ Im(m)`.
pub fn oracle_matrix_support<T: Real>(m: &ComplexMatrix<T>, theta: T) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    m.rotated_real_part(theta).max_eigenvalue()
}

/// Supremum over the symbol family: `sup_φ max Re(e^{-iθ} W(T_φ))`.
#[derive(Debug, Clone)]
pub struct SymbolOracle<T> {
    op: PeriodicTridiagonal<T>,
    uv: UvForms<T>,
    phi_grid: usize,
    refine: bool,
}

impl<T: Real> SymbolOracle<T> {
    pub fn new(op: &PeriodicTridiagonal<T>, phi_grid: usize) -> Result<Self> {
        if phi_grid < 8 {
            return Err(Error::PreconditionViolated(format!("phi grid must be at least 8, got {phi_grid}")));
        }
        Ok(Self { op: op.clone(), uv: uv_forms(&op.coupling_forms())?, phi_grid, refine: true })
    }

    /// Disables the closed-form extremal-angle evaluation, leaving the
    /// grid-limited maximum.
    pub fn without_refinement(mut self) -> Self {
        self.refine = false;
        self
    }

    /// Support of the symbol at one angle.
    pub fn at_phi(&self, theta: T, phi: T) -> Result<T> {
        oracle_matrix_support(&self.op.symbol(phi), theta)
    }

    /// The maximizing angle `φ₁` for direction θ.
    pub fn extremal_phi(&self, theta: T) -> Result<T> {
        Ok(self.uv.extremal_angles(-theta.cos(), -theta.sin())?.1)
    }

    pub fn value(&self, theta: T) -> Result<T> {
        let mut best = T::neg_infinity();
        for k in 0..self.phi_grid {
            let phi = T::TAU() * T::from_usize_lossy(k) / T::from_usize_lossy(self.phi_grid);
            best = best.max(self.at_phi(theta, phi)?);
        }
        if self.refine {
            best = best.max(self.at_phi(theta, self.extremal_phi(theta)?)?);
        }
        Ok(best)
    }
}

pub fn oracle_symbol_support<T: Real>(op: &PeriodicTridiagonal<T>, theta: T, phi_grid: usize) -> Result<T> {
    SymbolOracle::new(op, phi_grid)?.value(theta)
}

/// Support of the leading `size x size` section; a lower bound for the
/// support of `closure W(T)`, increasing with `size`.
#[derive(Debug, Clone)]
pub struct TruncationOracle<T> {
    sub: Vec<Complex<T>>,
    diag: Vec<Complex<T>>,
    sup: Vec<Complex<T>>,
}

impl<T: Real> TruncationOracle<T> {
    pub fn new(op: &PeriodicTridiagonal<T>, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::PreconditionViolated("truncation size must be positive".into()));
        }
        let (sub, diag, sup) = op.truncation_bands(size);
        Ok(Self { sub, diag, sup })
    }

    pub fn value(&self, theta: T) -> T {
        // Re(e^{-iθ} T_N) is Hermitian tridiagonal.
        let rot = Complex::from_polar(T::one(), -theta);
        let half = T::lit(0.5);
        let diag: Vec<T> = self.diag.iter().map(|&b| (rot * b).re).collect();
        let off: Vec<Complex<T>> =
            self.sup.iter().zip(&self.sub).map(|(&c, &a)| (rot * c + (rot * a).conj()) * half).collect();
        tridiagonal_max_eigenvalue(&diag, &off)
    }
}

pub fn oracle_truncation_support<T: Real>(op: &PeriodicTridiagonal<T>, theta: T, size: usize) -> Result<T> {
    Ok(TruncationOracle::new(op, size)?.value(theta))
}
