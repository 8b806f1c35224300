//! Polynomial engine: Kippenhahn polynomials of the symbol family and the
//! range polynomial `P` whose directional largest roots are the support
//! function of the closed numerical range.
//!
//! With pencil entries
//!
//! ```text
//! λ_{j,j}   = t + Re(b_{j-1}) x + Im(b_{j-1}) y          1 <= j <= n+1
//! λ_{j,j+1} = α_{j-1} x + γ_{j-1} y                      1 <= j <= n
//! λ_{j+1,j} = conj(α_{j-1}) x + conj(γ_{j-1}) y
//! ```
//!
//! `G_n` is the determinant of the full tridiagonal pencil, `H_n` that of its
//! interior rows `2..=n` (`H_1 = 1`), and
//!
//! ```text
//! F_{T_φ} = G_n - |α_n x + γ_n y|² H_n + 2(-1)^n Re(Q) cos φ - 2(-1)^n Im(Q) sin φ
//! Q       = (conj(α_n) x + conj(γ_n) y) ∏_{j<n} (α_j x + γ_j y)
//! P       = (G_n - |α_n x + γ_n y|² H_n)² - 4 ∏_{j<=n} |α_j x + γ_j y|²
//! ```

mod tripoly;

use num_complex::Complex;

pub use tripoly::{Exponents, LinearForm3, PolyJson, TermJson, TriPoly};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::operator::CouplingForms;
use crate::scalar::Real;

/// Determinant of an "almost tridiagonal" matrix (tridiagonal plus the two
/// corners) by the four-term cyclic expansion.
pub fn almost_tridiag_det<T: Real>(lambda: &ComplexMatrix<T>) -> Result<Complex<T>> {
    if !lambda.is_square() {
        return Err(Error::NotSquare { rows: lambda.rows(), cols: lambda.cols() });
    }
    let m = lambda.rows();
    if m < 3 {
        return Err(Error::TooSmall { size: m, min: 3 });
    }
    for i in 0..m {
        for j in 0..m {
            let band = i.abs_diff(j) <= 1;
            let corner = (i == 0 && j == m - 1) || (i == m - 1 && j == 0);
            if !band && !corner && lambda[(i, j)].norm() > T::PATTERN_TOL {
                return Err(Error::NotAlmostTridiagonal { row: i, col: j });
            }
        }
    }
    let diag: Vec<_> = (0..m).map(|k| lambda[(k, k)]).collect();
    let upper: Vec<_> = (0..m - 1).map(|k| lambda[(k, k + 1)]).collect();
    let lower: Vec<_> = (0..m - 1).map(|k| lambda[(k + 1, k)]).collect();
    let one = Complex::new(T::one(), T::zero());

    let full = tridiagonal_det_numeric(&diag, &upper, &lower);
    let interior = tridiagonal_det_numeric(&diag[1..m - 1], &upper[1..m - 2], &lower[1..m - 2]);
    let top_right = lambda[(0, m - 1)];
    let bottom_left = lambda[(m - 1, 0)];
    let sign = if (m - 1).is_multiple_of(2) { one } else { -one };
    let up_chain = upper.iter().fold(one, |acc, &v| acc * v);
    let down_chain = lower.iter().fold(one, |acc, &v| acc * v);

    Ok(full - top_right * bottom_left * interior + sign * bottom_left * up_chain + sign * top_right * down_chain)
}

fn tridiagonal_det_numeric<T: Real>(diag: &[Complex<T>], upper: &[Complex<T>], lower: &[Complex<T>]) -> Complex<T> {
    let mut prev = Complex::new(T::one(), T::zero());
    let mut cur = match diag.first() {
        Some(&d) => d,
        None => return prev,
    };
    for k in 1..diag.len() {
        let next = diag[k] * cur - lower[k - 1] * upper[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The linear-form entries of `t I + x Re(T_φ) + y Im(T_φ)` away from the
/// corners. Index `k` (0-based) of `diag` is `λ_{k+1,k+1}`; of `upper` is
/// `λ_{k+1,k+2}`; of `lower` is `λ_{k+2,k+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pencil<T> {
    pub diag: Vec<LinearForm3<T>>,
    pub upper: Vec<LinearForm3<T>>,
    pub lower: Vec<LinearForm3<T>>,
}

pub fn pencil_entries<T: Real>(forms: &CouplingForms<T>) -> Pencil<T> {
    let one = Complex::new(T::one(), T::zero());
    let n = forms.n();
    let diag = (0..=n)
        .map(|j| {
            LinearForm3::new(one, Complex::new(forms.diag_re[j], T::zero()), Complex::new(forms.diag_im[j], T::zero()))
        })
        .collect();
    let upper: Vec<_> = (0..n).map(|j| LinearForm3::xy(forms.alpha[j], forms.gamma[j])).collect();
    let lower = upper.iter().map(LinearForm3::conj).collect();
    Pencil { diag, upper, lower }
}

/// Tridiagonal determinant over linear forms by the three-term recurrence
/// `D_k = λ_{k,k} D_{k-1} - λ_{k,k-1} λ_{k-1,k} D_{k-2}`.
fn tridiagonal_det_poly<T: Real>(
    diag: &[LinearForm3<T>],
    upper: &[LinearForm3<T>],
    lower: &[LinearForm3<T>],
) -> TriPoly<T> {
    let mut prev = TriPoly::one();
    let Some(first) = diag.first() else {
        return prev;
    };
    let mut cur = first.to_poly();
    for k in 1..diag.len() {
        let coupling = &lower[k - 1].to_poly() * &upper[k - 1].to_poly();
        let next = &(&diag[k].to_poly() * &cur) - &(&coupling * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `G_n`: determinant of the `(n+1) x (n+1)` tridiagonal pencil.
pub fn factor_g<T: Real>(forms: &CouplingForms<T>) -> Result<TriPoly<T>> {
    let p = pencil_entries(forms);
    tridiagonal_det_poly(&p.diag, &p.upper, &p.lower).into_real()
}

/// `H_n`: determinant over pencil rows `2..=n`; the constant 1 for `n = 1`.
pub fn factor_h<T: Real>(forms: &CouplingForms<T>) -> Result<TriPoly<T>> {
    let n = forms.n();
    if n == 1 {
        return Ok(TriPoly::one());
    }
    let p = pencil_entries(forms);
    tridiagonal_det_poly(&p.diag[1..n], &p.upper[1..n - 1], &p.lower[1..n - 1]).into_real()
}

/// `|α_j x + γ_j y|²` as a real quadratic form.
fn coupling_norm_sqr<T: Real>(forms: &CouplingForms<T>, j: usize) -> TriPoly<T> {
    let l = LinearForm3::xy(forms.alpha[j], forms.gamma[j]);
    (&l.to_poly() * &l.conj().to_poly()).re()
}

/// `G_n - |α_n x + γ_n y|² H_n`, the φ-independent part of `F_{T_φ}`.
fn phase_free_part<T: Real>(forms: &CouplingForms<T>) -> Result<TriPoly<T>> {
    let g = factor_g(forms)?;
    let h = factor_h(forms)?;
    Ok(&g - &(&coupling_norm_sqr(forms, forms.n()) * &h))
}

/// `Q = (conj(α_n) x + conj(γ_n) y) ∏_{j<n} (α_j x + γ_j y)`.
fn cycle_product<T: Real>(forms: &CouplingForms<T>) -> TriPoly<T> {
    let n = forms.n();
    let closing = LinearForm3::xy(forms.alpha[n], forms.gamma[n]).conj().to_poly();
    (0..n).fold(closing, |acc, j| &acc * &LinearForm3::xy(forms.alpha[j], forms.gamma[j]).to_poly())
}

fn parity_sign<T: Real>(n: usize) -> T {
    if n.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// Kippenhahn polynomial `det(t I + x Re(T_φ) + y Im(T_φ))` of the symbol.
pub fn kippenhahn_of_symbol<T: Real>(forms: &CouplingForms<T>, phi: T) -> Result<TriPoly<T>> {
    let q = cycle_product(forms);
    let two_sign = parity_sign::<T>(forms.n()) * T::lit(2.0);
    let base = phase_free_part(forms)?;
    let cos_part = q.re().scale_real(two_sign * phi.cos());
    let sin_part = q.im().scale_real(two_sign * phi.sin());
    (&(&base + &cos_part) - &sin_part).into_real()
}

/// The degree-`2(n+1)` range polynomial `P`.
pub fn range_polynomial<T: Real>(forms: &CouplingForms<T>) -> Result<TriPoly<T>> {
    let base = phase_free_part(forms)?;
    let product = (0..forms.period()).fold(TriPoly::one(), |acc, j| &acc * &coupling_norm_sqr(forms, j));
    (&base.pow(2) - &product.scale_real(T::lit(4.0))).into_real()
}

/// The φ-coefficients of `F_{T_φ} = G_n - |α_n x + γ_n y|² H_n - u cos φ - v sin φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct UvForms<T> {
    pub u: TriPoly<T>,
    pub v: TriPoly<T>,
}

pub fn uv_forms<T: Real>(forms: &CouplingForms<T>) -> Result<UvForms<T>> {
    let q = cycle_product(forms);
    let two_sign = parity_sign::<T>(forms.n()) * T::lit(2.0);
    Ok(UvForms { u: q.re().scale_real(-two_sign).into_real()?, v: q.im().scale_real(two_sign).into_real()? })
}

impl<T: Real> UvForms<T> {
    /// Angles `(φ₀, φ₁)` in `[0, 2π)` with `u cos φ + v sin φ` equal to
    /// `-√(u²+v²)` and `+√(u²+v²)` at `(x, y)`. The largest root of
    /// `F_{T_φ}(·, x, y)` is extremal in φ exactly there.
    pub fn extremal_angles(&self, x: T, y: T) -> Result<(T, T)> {
        let u = self.u.evaluate(T::zero(), x, y)?;
        let v = self.v.evaluate(T::zero(), x, y)?;
        let wrap = |a: T| if a < T::zero() { a + T::TAU() } else { a };
        let phi1 = wrap(v.atan2(u));
        let phi0 = wrap((-v).atan2(-u));
        Ok((phi0, phi1))
    }
}
