//! The periodic tridiagonal operator `T(a, b, c)` on `ℓ²(ℕ₀)`, its symbol
//! family and finite sections.
//!
//! Row `k` of the infinite matrix reads `a_k, b_k, c_k` (indices taken mod
//! the period), so row 0 is `b_0, c_0` and row 1 is `a_1, b_1, c_1`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;

/// `(sub, diag, sup)` diagonals of a finite tridiagonal matrix.
pub type Bands<T> = (Vec<Complex<T>>, Vec<Complex<T>>, Vec<Complex<T>>);

#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicTridiagonal<T> {
    a: Vec<Complex<T>>,
    b: Vec<Complex<T>>,
    c: Vec<Complex<T>>,
}

impl<T: Real> PeriodicTridiagonal<T> {
    /// Period words for the sub-, main and superdiagonal.
    ///
    /// A period of 1 is rejected; repeat the word (`[x] -> [x, x]`) to model
    /// a constant operator.
    pub fn new(a: Vec<Complex<T>>, b: Vec<Complex<T>>, c: Vec<Complex<T>>) -> Result<Self> {
        if a.len() != b.len() || b.len() != c.len() {
            return Err(Error::InvalidOperator(format!(
                "period words differ in length: a={}, b={}, c={}",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        if a.len() < 2 {
            return Err(Error::InvalidOperator(format!("period must be at least 2, got {}", a.len())));
        }
        let finite = |w: &[Complex<T>]| w.iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !(finite(&a) && finite(&b) && finite(&c)) {
            return Err(Error::InvalidOperator("non-finite entry".into()));
        }
        Ok(Self { a, b, c })
    }

    pub fn from_real(a: &[T], b: &[T], c: &[T]) -> Result<Self> {
        let lift = |w: &[T]| w.iter().map(|&v| Complex::new(v, T::zero())).collect();
        Self::new(lift(a), lift(b), lift(c))
    }

    /// `n + 1`.
    pub fn period(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Complex<T>] {
        &self.a
    }

    pub fn b(&self) -> &[Complex<T>] {
        &self.b
    }

    pub fn c(&self) -> &[Complex<T>] {
        &self.c
    }

    /// Multiplies every entry by `s`; `W(sT) = s W(T)`.
    pub fn scaled(&self, s: Complex<T>) -> Self {
        let mul = |w: &[Complex<T>]| w.iter().map(|&z| z * s).collect();
        Self { a: mul(&self.a), b: mul(&self.b), c: mul(&self.c) }
    }

    pub fn coupling_forms(&self) -> CouplingForms<T> {
        CouplingForms::from_operator(self)
    }

    /// The `(n+1) x (n+1)` symbol `T_φ`.
    ///
    /// For period 2 the corner terms fold onto the off-diagonal:
    /// `[[b0, c0 + a0 e^{-iφ}], [a1 + c1 e^{iφ}, b1]]`.
    pub fn symbol(&self, phi: T) -> ComplexMatrix<T> {
        let m = self.period();
        let n = m - 1;
        let down = Complex::from_polar(T::one(), -phi);
        let up = Complex::from_polar(T::one(), phi);
        let mut s = ComplexMatrix::zeros(m, m);
        for j in 0..m {
            s[(j, j)] = self.b[j];
        }
        if m == 2 {
            s[(0, 1)] = self.c[0] + self.a[0] * down;
            s[(1, 0)] = self.a[1] + self.c[1] * up;
            return s;
        }
        for j in 0..n {
            s[(j, j + 1)] = self.c[j];
            s[(j + 1, j)] = self.a[j + 1];
        }
        s[(0, n)] = self.a[0] * down;
        s[(n, 0)] = self.c[n] * up;
        s
    }

    /// Bands `(sub, diag, sup)` of the leading `size x size` section;
    /// `sub[k]` is entry `(k+1, k)` and `sup[k]` is entry `(k, k+1)`.
    pub fn truncation_bands(&self, size: usize) -> Bands<T> {
        assert!(size >= 1, "truncation size must be positive");
        let m = self.period();
        let diag = (0..size).map(|k| self.b[k % m]).collect();
        let sub = (0..size - 1).map(|k| self.a[(k + 1) % m]).collect();
        let sup = (0..size - 1).map(|k| self.c[k % m]).collect();
        (sub, diag, sup)
    }

    /// Leading `size x size` section (compression to the first `size`
    /// coordinates).
    pub fn truncate(&self, size: usize) -> ComplexMatrix<T> {
        let (sub, diag, sup) = self.truncation_bands(size);
        let mut t = ComplexMatrix::from_diagonal(&diag);
        for k in 0..size - 1 {
            t[(k + 1, k)] = sub[k];
            t[(k, k + 1)] = sup[k];
        }
        t
    }
}

/// Coupling constants `α_j, γ_j` and the split diagonal.
///
/// For `j < n`: `α_j + iγ_j = c_j` and `α_j - iγ_j = conj(a_{j+1})`.
/// The wrap-around pair uses `α_n + iγ_n = a_0`, `α_n - iγ_n = conj(c_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingForms<T> {
    pub alpha: Vec<Complex<T>>,
    pub gamma: Vec<Complex<T>>,
    pub diag_re: Vec<T>,
    pub diag_im: Vec<T>,
}

impl<T: Real> CouplingForms<T> {
    pub fn from_operator(op: &PeriodicTridiagonal<T>) -> Self {
        let m = op.period();
        let n = m - 1;
        let half = T::lit(0.5);
        let two_i = Complex::new(T::zero(), T::lit(2.0));
        let pair =
            |upper: Complex<T>, lower_conj: Complex<T>| ((upper + lower_conj) * half, (upper - lower_conj) / two_i);

        let mut alpha = Vec::with_capacity(m);
        let mut gamma = Vec::with_capacity(m);
        for j in 0..n {
            let (al, ga) = pair(op.c[j], op.a[j + 1].conj());
            alpha.push(al);
            gamma.push(ga);
        }
        let (al, ga) = pair(op.a[0], op.c[n].conj());
        alpha.push(al);
        gamma.push(ga);
        Self {
            alpha,
            gamma,
            diag_re: op.b.iter().map(|z| z.re).collect(),
            diag_im: op.b.iter().map(|z| z.im).collect(),
        }
    }

    /// `n + 1`.
    pub fn period(&self) -> usize {
        self.alpha.len()
    }

    /// `n`, the index of the wrap-around coupling.
    pub fn n(&self) -> usize {
        self.alpha.len() - 1
    }

    /// Inverts the coupling map.
    pub fn to_operator(&self) -> Result<PeriodicTridiagonal<T>> {
        let m = self.period();
        let n = m - 1;
        let i = Complex::new(T::zero(), T::one());
        let mut a = vec![Complex::new(T::zero(), T::zero()); m];
        let mut c = a.clone();
        for j in 0..n {
            c[j] = self.alpha[j] + i * self.gamma[j];
            a[j + 1] = (self.alpha[j] - i * self.gamma[j]).conj();
        }
        a[0] = self.alpha[n] + i * self.gamma[n];
        c[n] = (self.alpha[n] - i * self.gamma[n]).conj();
        let b = self.diag_re.iter().zip(&self.diag_im).map(|(&re, &im)| Complex::new(re, im)).collect();
        PeriodicTridiagonal::new(a, b, c)
    }

    /// True when `a`, `c` are real and `b = 0`.
    pub fn is_real_zero_diagonal(&self, tol: T) -> bool {
        // Real a, c <=> α real and γ purely imaginary.
        self.alpha.iter().all(|z| z.im.abs() <= tol)
            && self.gamma.iter().all(|z| z.re.abs() <= tol)
            && self.diag_re.iter().chain(&self.diag_im).all(|v| v.abs() <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn close(a: C, b: C) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn coupling_forms_of_quartic_example() {
        let op = PeriodicTridiagonal::from_real(&[1.0, 3.0], &[0.0, 0.0], &[4.0, 8.0]).unwrap();
        let f = op.coupling_forms();
        assert!(close(f.alpha[0], c(3.5, 0.0)));
        assert!(close(f.gamma[0], c(0.0, -0.5)));
        assert!(close(f.alpha[1], c(4.5, 0.0)));
        assert!(close(f.gamma[1], c(0.0, 3.5)));
    }

    #[test]
    fn coupling_forms_symmetric_and_shifted() {
        let f = PeriodicTridiagonal::from_real(&[1.0, 1.0], &[0.0, 0.0], &[1.0, 1.0]).unwrap().coupling_forms();
        assert!(f.alpha.iter().all(|&z| close(z, c(1.0, 0.0))));
        assert!(f.gamma.iter().all(|&z| close(z, c(0.0, 0.0))));

        let f = PeriodicTridiagonal::from_real(&[0.0, 1.0], &[0.0, 0.0], &[1.0, 1.0]).unwrap().coupling_forms();
        assert!(close(f.alpha[0], c(1.0, 0.0)) && close(f.gamma[0], c(0.0, 0.0)));
        assert!(close(f.alpha[1], c(0.5, 0.0)) && close(f.gamma[1], c(0.0, 0.5)));
    }

    #[test]
    fn rejects_bad_periods() {
        let one = vec![c(1.0, 0.0)];
        assert!(PeriodicTridiagonal::new(one.clone(), one.clone(), one).is_err());
        let two = vec![c(1.0, 0.0); 2];
        assert!(PeriodicTridiagonal::new(two.clone(), two.clone(), vec![c(1.0, 0.0); 3]).is_err());
    }

    #[test]
    fn period_two_symbol() {
        let op = PeriodicTridiagonal::from_real(&[1.0, -1.0], &[0.0, 0.0], &[1.0, 1.0]).unwrap();
        let s = op.symbol(0.0);
        assert!(close(s[(0, 1)], c(2.0, 0.0)) && close(s[(1, 0)], c(0.0, 0.0)));

        let op = PeriodicTridiagonal::from_real(&[1.0, 3.0], &[0.0, 0.0], &[4.0, 8.0]).unwrap();
        let s = op.symbol(std::f64::consts::PI);
        assert!(close(s[(0, 1)], c(3.0, 0.0)) && close(s[(1, 0)], c(-5.0, 0.0)));
        assert!(close(s[(0, 0)], c(0.0, 0.0)) && close(s[(1, 1)], c(0.0, 0.0)));
    }

    #[test]
    fn period_three_symbol_corners() {
        let op = PeriodicTridiagonal::new(
            vec![c(1.0, 2.0), c(0.5, 0.0), c(-1.0, 1.0)],
            vec![c(0.1, 0.0), c(0.2, 0.3), c(0.0, -1.0)],
            vec![c(2.0, 0.0), c(0.0, 1.0), c(3.0, -2.0)],
        )
        .unwrap();
        let s = op.symbol(0.0);
        assert_eq!(s[(0, 2)], op.a()[0]);
        assert_eq!(s[(2, 0)], op.c()[2]);
        assert_eq!(s[(0, 1)], op.c()[0]);
        assert_eq!(s[(1, 0)], op.a()[1]);
        assert_eq!(s[(2, 1)], op.a()[2]);
        assert_eq!(s[(1, 1)], op.b()[1]);
    }

    #[test]
    fn truncations() {
        let op = PeriodicTridiagonal::from_real(&[1.0, -1.0], &[0.0, 0.0], &[1.0, 1.0]).unwrap();
        assert_eq!(op.truncate(1)[(0, 0)], c(0.0, 0.0));
        // Row 1 reads a_1 b_1 c_1 = -1 0 1, row 2 reads a_2 = a_0 = 1.
        let t = op.truncate(3);
        let want = [[0.0, 1.0, 0.0], [-1.0, 0.0, 1.0], [0.0, 1.0, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t[(i, j)], c(want[i][j], 0.0), "({i},{j})");
            }
        }

        let op3 = PeriodicTridiagonal::from_real(&[0.0; 3], &[1.0, 2.0, 3.0], &[0.0; 3]).unwrap();
        let t = op3.truncate(5);
        let diag: Vec<f64> = (0..5).map(|k| t[(k, k)].re).collect();
        assert_eq!(diag, vec![1.0, 2.0, 3.0, 1.0, 2.0]);
    }

    #[test]
    fn self_adjoint_symbol_is_hermitian() {
        // c_j = conj(a_{j+1}) cyclically, b real.
        let a = vec![c(0.3, -0.2), c(1.0, 0.5), c(-0.4, 0.1)];
        let cc = vec![a[1].conj(), a[2].conj(), a[0].conj()];
        let op = PeriodicTridiagonal::new(a, vec![c(0.5, 0.0), c(-1.0, 0.0), c(0.0, 0.0)], cc).unwrap();
        for k in 0..16 {
            let phi = k as f64 * 0.4;
            assert!(op.symbol(phi).hermitian_deviation() < 1e-14);
        }
    }
}
