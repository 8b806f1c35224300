use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        Self { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Builds a matrix from nested rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            m.data[i * c..(i + 1) * c].copy_from_slice(row);
        }
        m
    }

    pub fn from_real_rows(rows: &[Vec<T>]) -> Self {
        let rows: Vec<Vec<Complex<T>>> =
            rows.iter().map(|row| row.iter().map(|&v| Complex::new(v, T::zero())).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&v| v * s).collect() }
    }

    /// `(A + A*) / 2`.
    pub fn hermitian_part(&self) -> Self {
        let half = T::lit(0.5);
        let adj = self.adjoint();
        let mut out = self.clone();
        for (o, a) in out.data.iter_mut().zip(adj.data) {
            *o = (*o + a) * half;
        }
        out
    }

    /// `(A - A*) / (2i)`.
    pub fn skew_hermitian_part(&self) -> Self {
        let adj = self.adjoint();
        let denom = Complex::new(T::zero(), T::lit(2.0));
        let mut out = self.clone();
        for (o, a) in out.data.iter_mut().zip(adj.data) {
            *o = (*o - a) / denom;
        }
        out
    }

    /// `Re(e^{-iθ} A) = cos θ Re(A) + sin θ Im(A)`, whose top eigenvalue is
    /// the support value of `W(A)` in direction θ.
    pub fn rotated_real_part(&self, theta: T) -> Self {
        self.scale(Complex::from_polar(T::one(), -theta)).hermitian_part()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, v| acc.max(v.norm()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, v| acc + v.norm_sqr()).sqrt()
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self[(i, i)])
    }

    /// Largest `|m[i][j] - conj(m[j][i])|`.
    pub fn hermitian_deviation(&self) -> T {
        let mut dev = T::zero();
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Determinant by LU factorization with partial pivoting.
    pub fn lu_determinant(&self) -> Result<Complex<T>> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Complex::new(T::one(), T::zero());
        for k in 0..n {
            let (pivot_row, pivot_abs) =
                (k..n)
                    .map(|r| (r, a[r * n + k].norm()))
                    .fold((k, -T::one()), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot_abs == T::zero() {
                return Ok(Complex::new(T::zero(), T::zero()));
            }
            if pivot_row != k {
                for j in 0..n {
                    a.swap(k * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for r in k + 1..n {
                let factor = a[r * n + k] / pivot;
                if factor.norm_sqr() == T::zero() {
                    continue;
                }
                for j in k + 1..n {
                    let upd = factor * a[k * n + j];
                    a[r * n + j] -= upd;
                }
            }
        }
        Ok(det)
    }

    /// All eigenvalues of a Hermitian matrix, in descending order, by cyclic
    /// complex Jacobi rotations.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<T>> {
        self.require_square()?;
        let tolerance = T::HERMITIAN_REL_TOL * (T::one() + self.max_abs());
        let deviation = self.hermitian_deviation();
        if !(deviation <= tolerance) {
            return Err(Error::NotHermitian {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
                tolerance: tolerance.to_f64().unwrap_or(f64::NAN),
            });
        }
        let mut a = self.hermitian_part();
        let mut eig = jacobi_diagonalize(&mut a)?;
        eig.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
        Ok(eig)
    }

    pub fn max_eigenvalue(&self) -> Result<T> {
        Ok(self.hermitian_eigenvalues()?[0])
    }
}

pub(crate) const JACOBI_MAX_SWEEPS: usize = 100;

/// In-place cyclic Jacobi on a Hermitian matrix; returns the diagonal.
///
/// Each rotation first applies the phase `diag(1, e^{-iφ})` that makes the
/// pivot `a_pq = |a_pq| e^{iφ}` real, then the classical real 2x2 rotation.
fn jacobi_diagonalize<T: Real>(a: &mut ComplexMatrix<T>) -> Result<Vec<T>> {
    let n = a.rows;
    let zero = Complex::new(T::zero(), T::zero());
    for i in 0..n {
        a[(i, i)] = Complex::new(a[(i, i)].re, T::zero());
    }
    let threshold = T::JACOBI_REL_TOL * a.frobenius_norm();
    let off_norm = |a: &ComplexMatrix<T>| {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if off_norm(a) <= threshold {
            return Ok((0..n).map(|i| a[(i, i)].re).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == T::zero() {
                    continue;
                }
                let phase = apq / r; // e^{iφ}
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let zeta = (aqq - app) / (r + r);
                let t = if zeta >= T::zero() {
                    T::one() / (zeta + (T::one() + zeta * zeta).sqrt())
                } else {
                    -T::one() / (-zeta + (T::one() + zeta * zeta).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let conj_phase = phase.conj();

                // A <- A U with U = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on (p, q).
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)] * conj_phase;
                    a[(k, p)] = akp * c - akq * s;
                    a[(k, q)] = akp * s + akq * c;
                }
                // A <- U* A.
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)] * phase;
                    a[(p, k)] = apk * c - aqk * s;
                    a[(q, k)] = apk * s + aqk * c;
                }
                a[(p, q)] = zero;
                a[(q, p)] = zero;
                a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
                a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
            }
        }
    }
    if off_norm(a) <= threshold {
        return Ok((0..n).map(|i| a[(i, i)].re).collect());
    }
    Err(Error::NoConvergence { sweeps: JACOBI_MAX_SWEEPS })
}

/// Largest eigenvalue of the Hermitian tridiagonal matrix with real diagonal
/// `diag` and off-diagonal entries `off` (only the moduli matter).
///
/// Sturm-count bisection on the `LDLᵀ` pivots; O(n) per probe.
pub fn tridiagonal_max_eigenvalue<T: Real>(diag: &[T], off: &[Complex<T>]) -> T {
    assert!(!diag.is_empty(), "empty tridiagonal matrix");
    assert_eq!(off.len() + 1, diag.len(), "off-diagonal length must be n-1");
    let e2: Vec<T> = off.iter().map(|v| v.norm_sqr()).collect();
    let e: Vec<T> = off.iter().map(|v| v.norm()).collect();

    // Gershgorin bounds.
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for (i, &d) in diag.iter().enumerate() {
        let left = if i > 0 { e[i - 1] } else { T::zero() };
        let right = if i < e.len() { e[i] } else { T::zero() };
        lo = lo.min(d - left - right);
        hi = hi.max(d + left + right);
    }
    let n = diag.len();
    // Number of eigenvalues strictly below x.
    let count_below = |x: T| -> usize {
        let tiny = T::min_positive_value();
        let mut count = 0;
        let mut q = diag[0] - x;
        if q < T::zero() {
            count += 1;
        }
        for i in 1..n {
            let prev = if q.abs() < tiny { -tiny } else { q };
            q = diag[i] - x - e2[i - 1] / prev;
            if q < T::zero() {
                count += 1;
            }
        }
        count
    };

    let scale = lo.abs().max(hi.abs()).max(T::min_positive_value());
    for _ in 0..200 {
        let mid = lo + (hi - lo) * T::lit(0.5);
        if mid <= lo || mid >= hi || hi - lo <= T::epsilon() * scale {
            break;
        }
        if count_below(mid) == n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo + (hi - lo) * T::lit(0.5)
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                for j in 0..rhs.cols {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }
}
