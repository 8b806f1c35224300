use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RealPoly;
use crate::scalar::Real;

/// Exponents `(e_t, e_x, e_y)` of a monomial `t^e_t x^e_x y^e_y`.
pub type Exponents = (u32, u32, u32);

/// Linear form `μ_t t + μ_x x + μ_y y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearForm3<T> {
    pub coef_t: Complex<T>,
    pub coef_x: Complex<T>,
    pub coef_y: Complex<T>,
}

impl<T: Real> LinearForm3<T> {
    pub fn new(coef_t: Complex<T>, coef_x: Complex<T>, coef_y: Complex<T>) -> Self {
        Self { coef_t, coef_x, coef_y }
    }

    /// `α x + γ y`.
    pub fn xy(alpha: Complex<T>, gamma: Complex<T>) -> Self {
        Self::new(Complex::new(T::zero(), T::zero()), alpha, gamma)
    }

    /// Conjugates the coefficients; equals the complex conjugate of the form
    /// for real `(t, x, y)`.
    pub fn conj(&self) -> Self {
        Self::new(self.coef_t.conj(), self.coef_x.conj(), self.coef_y.conj())
    }

    pub fn eval(&self, t: T, x: T, y: T) -> Complex<T> {
        self.coef_t * t + self.coef_x * x + self.coef_y * y
    }

    pub fn to_poly(&self) -> TriPoly<T> {
        let mut p = TriPoly::zero(1);
        p.add_term((1, 0, 0), self.coef_t);
        p.add_term((0, 1, 0), self.coef_x);
        p.add_term((0, 0, 1), self.coef_y);
        p
    }
}

/// Homogeneous polynomial in `(t, x, y)` with complex coefficients.
///
/// Only nonzero coefficients are stored; every stored exponent triple sums to
/// `degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriPoly<T> {
    degree: u32,
    terms: BTreeMap<Exponents, Complex<T>>,
}

impl<T: Real> TriPoly<T> {
    pub fn zero(degree: u32) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: Complex<T>) -> Self {
        let mut p = Self::zero(0);
        p.add_term((0, 0, 0), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Complex::new(T::one(), T::zero()))
    }

    /// Builds from `(exponents, coefficient)` pairs; fails if they do not
    /// share one total degree.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exponents, Complex<T>)>) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (e, c) in terms {
            if e.0 + e.1 + e.2 != degree {
                return Err(Error::PreconditionViolated(format!("monomial {e:?} is not of degree {degree}")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponents, Complex<T>)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, e: Exponents) -> Complex<T> {
        self.terms.get(&e).copied().unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    fn add_term(&mut self, e: Exponents, c: Complex<T>) {
        debug_assert_eq!(e.0 + e.1 + e.2, self.degree);
        let slot = self.terms.entry(e).or_insert_with(|| Complex::new(T::zero(), T::zero()));
        *slot += c;
        if slot.re == T::zero() && slot.im == T::zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        let mut out = Self::zero(self.degree);
        for (&e, &c) in &self.terms {
            out.add_term(e, c * s);
        }
        out
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Coefficient-wise real part (the real part of the polynomial's values
    /// at real points).
    pub fn re(&self) -> Self {
        self.map_coeffs(|c| Complex::new(c.re, T::zero()))
    }

    /// Coefficient-wise imaginary part.
    pub fn im(&self) -> Self {
        self.map_coeffs(|c| Complex::new(c.im, T::zero()))
    }

    fn map_coeffs(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let mut out = Self::zero(self.degree);
        for (&e, &c) in &self.terms {
            out.add_term(e, f(c));
        }
        out
    }

    /// Worst `|Im c| / (1 + |Re c|)` over the coefficients.
    pub fn imaginary_residue(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc.max(c.im.abs() / (T::one() + c.re.abs())))
    }

    /// Checks that the polynomial is real within tolerance and drops the
    /// imaginary residue.
    pub fn into_real(self) -> Result<Self> {
        let residue = self.imaginary_residue();
        if residue > T::REAL_COEF_TOL {
            return Err(Error::ImaginaryResidue { residue: residue.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(self.re())
    }

    pub fn max_coefficient(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc.max(c.norm()))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().all(|e| e.0 + e.1 + e.2 == self.degree)
    }

    /// Coefficient-wise distance `max |p_e - q_e|`.
    pub fn max_coefficient_diff(&self, other: &Self) -> T {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .fold(T::zero(), |acc, &e| acc.max((self.coefficient(e) - other.coefficient(e)).norm()))
    }

    pub fn eval_complex(&self, t: T, x: T, y: T) -> Complex<T> {
        // Group by power of t, then Horner in t.
        let mut by_t = vec![Complex::new(T::zero(), T::zero()); self.degree as usize + 1];
        for (&(et, ex, ey), &c) in &self.terms {
            by_t[et as usize] += c * x.powi(ex as i32) * y.powi(ey as i32);
        }
        by_t.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * t + c)
    }

    /// Real value at a real point; fails if the imaginary part is not
    /// rounding noise.
    pub fn evaluate(&self, t: T, x: T, y: T) -> Result<T> {
        let v = self.eval_complex(t, x, y);
        if v.im.abs() > T::REAL_COEF_TOL * (T::one() + v.norm()) {
            return Err(Error::ImaginaryResidue { residue: v.im.abs().to_f64().unwrap_or(f64::NAN) });
        }
        Ok(v.re)
    }

    /// `t ↦ p(t, -cos θ, -sin θ)`.
    pub fn restrict_to_direction(&self, theta: T) -> RealPoly<T> {
        let (x, y) = (-theta.cos(), -theta.sin());
        let mut coeffs = vec![T::zero(); self.degree as usize + 1];
        for (&(et, ex, ey), &c) in &self.terms {
            coeffs[et as usize] += c.re * x.powi(ex as i32) * y.powi(ey as i32);
        }
        RealPoly::new(coeffs)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(&(et, ex, ey), c)| TermJson {
                    et,
                    ex,
                    ey,
                    re: c.re.to_f64().unwrap_or(f64::NAN),
                    im: c.im.to_f64().unwrap_or(f64::NAN),
                })
                .collect(),
        }
    }

    pub fn from_json(doc: &PolyJson) -> Result<Self> {
        Self::from_terms(
            doc.degree,
            doc.terms.iter().map(|t| ((t.et, t.ex, t.ey), Complex::new(T::lit(t.re), T::lit(t.im)))),
        )
    }
}

impl<T: Real> Add for &TriPoly<T> {
    type Output = TriPoly<T>;

    fn add(self, rhs: Self) -> TriPoly<T> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding polynomials of different degree");
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<T: Real> Neg for &TriPoly<T> {
    type Output = TriPoly<T>;

    fn neg(self) -> TriPoly<T> {
        self.map_coeffs(|c| -c)
    }
}

impl<T: Real> Sub for &TriPoly<T> {
    type Output = TriPoly<T>;

    fn sub(self, rhs: Self) -> TriPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Real> Mul for &TriPoly<T> {
    type Output = TriPoly<T>;

    fn mul(self, rhs: Self) -> TriPoly<T> {
        let mut out = TriPoly::zero(self.degree + rhs.degree);
        for (&(a0, a1, a2), &ca) in &self.terms {
            for (&(b0, b1, b2), &cb) in &rhs.terms {
                out.add_term((a0 + b0, a1 + b1, a2 + b2), ca * cb);
            }
        }
        out
    }
}

/// Wire form: `{degree, terms: [{et, ex, ey, re, im}]}`, terms in descending
/// exponent order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub et: u32,
    pub ex: u32,
    pub ey: u32,
    pub re: f64,
    pub im: f64,
}
