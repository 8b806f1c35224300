use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

const NEWTON_MAX_STEPS: usize = 200;
const BISECTION_MAX_STEPS: usize = 400;
const ABERTH_MAX_STEPS: usize = 1000;

/// Univariate real polynomial, coefficients in ascending degree order.
///
/// Trailing zero coefficients are trimmed on construction, so the stored
/// leading coefficient is nonzero unless the polynomial is identically zero.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Real> RealPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&T::zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Self { coeffs }
    }

    /// `∏ (t - r)`.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut coeffs = vec![T::one()];
        for &r in roots {
            let mut next = vec![T::zero(); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> T {
        *self.coeffs.last().expect("nonempty")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == T::zero()
    }

    pub fn eval(&self, t: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * t + c)
    }

    fn eval_complex(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c)
    }

    /// Bound on the rounding noise of `eval(t)`: twice the running error
    /// bound of Horner's rule (Higham, Accuracy and Stability, Alg. 5.1).
    fn eval_noise(&self, t: T) -> T {
        let mut coeffs = self.coeffs.iter().rev();
        let Some(&lead) = coeffs.next() else {
            return T::zero();
        };
        let (mut y, mut mu) = (lead, lead.abs() * T::lit(0.5));
        for &c in coeffs {
            y = y * t + c;
            mu = mu * t.abs() + y.abs();
        }
        T::lit(2.0) * T::epsilon() * (T::lit(2.0) * mu - y.abs()).max(T::zero())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::new(vec![T::zero()]);
        }
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * T::from_usize_lossy(k)).collect())
    }

    pub fn monic(&self) -> Self {
        let lead = self.leading();
        Self::new(self.coeffs.iter().map(|&c| c / lead).collect())
    }

    /// Cauchy bound `1 + max |c_k / c_deg|`: every root has modulus below it.
    pub fn cauchy_bound(&self) -> T {
        let lead = self.leading().abs();
        T::one() + self.coeffs[..self.degree()].iter().fold(T::zero(), |acc, &c| acc.max(c.abs() / lead))
    }

    /// Largest real root.
    ///
    /// With `all_real_hint` the polynomial is taken to be real-rooted: Newton
    /// runs downward from the Cauchy bound (monotone above the largest root),
    /// with bisection as the safeguard. A multiple root is recognized as the
    /// largest root of the derivative at which the polynomial itself vanishes,
    /// which pins it to full accuracy where Newton alone would stall.
    /// Without the hint, real roots are isolated between the critical points.
    pub fn largest_real_root(&self, all_real_hint: bool) -> Result<T> {
        if self.is_zero() || self.degree() == 0 {
            return Err(Error::DegreeZero);
        }
        let p = self.monic();
        if all_real_hint {
            Ok(p.largest_root_real_rooted())
        } else {
            p.real_roots().first().copied().ok_or(Error::NoRealRoot)
        }
    }

    fn largest_root_real_rooted(&self) -> T {
        if self.degree() == 1 {
            return -self.coeffs[0];
        }
        let upper = self.cauchy_bound();
        // Largest critical point: the polynomial is increasing to its right.
        let lower = self.derivative().monic().largest_root_real_rooted();
        let at_lower = self.eval(lower);
        if at_lower >= -self.eval_noise(lower) {
            return lower;
        }
        self.newton_from_above(lower.min(upper), upper)
    }

    /// Newton iteration from `hi` downward on a bracket `[lo, hi]` where the
    /// monic polynomial is increasing, `p(lo) < 0 < p(hi)`.
    fn newton_from_above(&self, mut lo: T, mut hi: T) -> T {
        let dp = self.derivative();
        let mut t = hi;
        for _ in 0..NEWTON_MAX_STEPS {
            let f = self.eval(t);
            if f == T::zero() {
                return t;
            }
            if f > T::zero() {
                hi = hi.min(t);
            } else {
                lo = lo.max(t);
            }
            let d = dp.eval(t);
            let next = t - f / d;
            // Out of the bracket or no progress: hand over to bisection.
            if !(d > T::zero()) || !(next > lo && next < hi) || next == t {
                if (t - next).abs() <= T::epsilon() * (T::one() + t.abs()) {
                    return next;
                }
                return self.bisect(lo, hi);
            }
            if (next - t).abs() <= T::lit(4.0) * T::epsilon() * (T::one() + t.abs()) {
                return next;
            }
            t = next;
        }
        self.bisect(lo, hi)
    }

    fn bisect(&self, mut lo: T, mut hi: T) -> T {
        let lo_positive = self.eval(lo) > T::zero();
        for _ in 0..BISECTION_MAX_STEPS {
            let mid = lo + (hi - lo) * T::lit(0.5);
            if mid <= lo || mid >= hi {
                break;
            }
            let f = self.eval(mid);
            if f == T::zero() {
                return mid;
            }
            if (f > T::zero()) == lo_positive {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo + (hi - lo) * T::lit(0.5)
    }

    /// All distinct real roots in descending order, found by sign changes on
    /// the monotone pieces between consecutive real critical points.
    /// Critical points where the polynomial touches zero count as roots.
    pub fn real_roots(&self) -> Vec<T> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let p = self.monic();
        if p.degree() == 1 {
            return vec![-p.coeffs[0]];
        }
        let bound = p.cauchy_bound();
        let crit: Vec<T> = p.derivative().real_roots().into_iter().filter(|c| c.abs() < bound).collect();

        let mut knots = Vec::with_capacity(crit.len() + 2);
        knots.push(bound);
        knots.extend(crit.iter().copied());
        knots.push(-bound);

        let mut roots: Vec<T> = Vec::new();
        let push = |r: T, roots: &mut Vec<T>| {
            let dup = roots
                .last()
                .is_some_and(|&last| (last - r).abs() <= T::lit(64.0) * T::epsilon() * (T::one() + r.abs()));
            if !dup {
                roots.push(r);
            }
        };
        for w in knots.windows(2) {
            let (hi, lo) = (w[0], w[1]);
            let (fh, fl) = (p.eval(hi), p.eval(lo));
            let hi_is_crit = hi < bound;
            if hi_is_crit && fh.abs() <= p.eval_noise(hi) {
                push(hi, &mut roots);
                continue;
            }
            if (fh > T::zero()) != (fl > T::zero()) && fl.abs() > p.eval_noise(lo) {
                push(p.bisect(lo, hi), &mut roots);
            }
        }
        roots
    }

    /// All complex roots by Aberth–Ehrlich simultaneous iteration.
    pub fn complex_roots(&self) -> Vec<Complex<T>> {
        let n = self.degree();
        if n == 0 {
            return Vec::new();
        }
        let p = self.monic();
        let dp = p.derivative();
        let radius = p.cauchy_bound();
        // Starting points on a circle, rotated off the real axis.
        let mut z: Vec<Complex<T>> = (0..n)
            .map(|k| {
                let angle = T::TAU() * (T::from_usize_lossy(k) + T::lit(0.25)) / T::from_usize_lossy(n) + T::lit(0.4);
                Complex::from_polar(radius * T::lit(0.5), angle)
            })
            .collect();
        // A root is frozen once |p(z)| is at rounding level or its step
        // stops making relative progress.
        let mut done = vec![false; n];
        for _ in 0..ABERTH_MAX_STEPS {
            if done.iter().all(|&d| d) {
                break;
            }
            for i in 0..n {
                if done[i] {
                    continue;
                }
                let f = p.eval_complex(z[i]);
                if f.norm() <= p.eval_noise(z[i].norm()) {
                    done[i] = true;
                    continue;
                }
                let ratio = f / dp.eval_complex(z[i]);
                let repulsion = (0..n).filter(|&j| j != i).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                    let diff = z[i] - z[j];
                    if diff.norm() == T::zero() {
                        acc
                    } else {
                        acc + diff.inv()
                    }
                });
                let denom = Complex::new(T::one(), T::zero()) - ratio * repulsion;
                let step = if denom.norm() == T::zero() { ratio } else { ratio / denom };
                if step.re.is_finite() && step.im.is_finite() {
                    z[i] -= step;
                    done[i] = step.norm() <= T::lit(4.0) * T::epsilon() * (T::one() + z[i].norm());
                } else {
                    done[i] = true;
                }
            }
        }
        z.sort_by(|a, b| b.re.partial_cmp(&a.re).expect("finite roots"));
        z
    }

    /// Sum of `|Im z|` over all complex roots; zero for a real-rooted
    /// polynomial up to root-finder accuracy.
    pub fn realness_residue(&self) -> T {
        self.complex_roots().iter().fold(T::zero(), |acc, z| acc + z.im.abs())
    }
}
