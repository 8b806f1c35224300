use crate::error::{Error, Result};
use crate::kippenhahn::{range_polynomial, TriPoly};
use crate::operator::CouplingForms;
use crate::scalar::Real;

/// Support function of `closure W(T)`, backed by the range polynomial `P`:
/// `h(θ) = max { t : P(t, -cos θ, -sin θ) = 0 }`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportFunction<T> {
    poly: TriPoly<T>,
}

impl<T: Real> SupportFunction<T> {
    pub fn new(forms: &CouplingForms<T>) -> Result<Self> {
        Ok(Self { poly: range_polynomial(forms)? })
    }

    /// Uses any hyperbolic polynomial, e.g. one read back from disk.
    pub fn from_polynomial(poly: TriPoly<T>) -> Self {
        Self { poly }
    }

    pub fn polynomial(&self) -> &TriPoly<T> {
        &self.poly
    }

    pub fn value(&self, theta: T) -> Result<T> {
        self.poly.restrict_to_direction(theta).largest_real_root(true)
    }

    /// Samples on the uniform grid `θ_k = 2πk / n_samples`.
    pub fn profile(&self, n_samples: usize) -> Result<SupportProfile<T>> {
        if n_samples < 3 {
            return Err(Error::InvalidProfile(format!("need at least 3 samples, got {n_samples}")));
        }
        let samples = uniform_angles::<T>(n_samples)
            .into_iter()
            .map(|theta| Ok((theta, self.value(theta)?)))
            .collect::<Result<Vec<_>>>()?;
        SupportProfile::new(samples)
    }
}

pub fn support<T: Real>(forms: &CouplingForms<T>, theta: T) -> Result<T> {
    SupportFunction::new(forms)?.value(theta)
}

pub fn support_profile<T: Real>(forms: &CouplingForms<T>, n_samples: usize) -> Result<SupportProfile<T>> {
    SupportFunction::new(forms)?.profile(n_samples)
}

/// `2πk / n` for `k = 0..n`.
pub fn uniform_angles<T: Real>(n: usize) -> Vec<T> {
    (0..n).map(|k| T::TAU() * T::from_usize_lossy(k) / T::from_usize_lossy(n)).collect()
}

/// Sampled support function `{(θ_k, h(θ_k))}` with `θ` strictly increasing
/// in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportProfile<T> {
    samples: Vec<(T, T)>,
}

impl<T: Real> SupportProfile<T> {
    pub fn new(samples: Vec<(T, T)>) -> Result<Self> {
        if samples.len() < 3 {
            return Err(Error::InvalidProfile(format!("need at least 3 samples, got {}", samples.len())));
        }
        for (k, &(theta, h)) in samples.iter().enumerate() {
            if !(theta >= T::zero() && theta < T::TAU()) {
                return Err(Error::InvalidProfile(format!("angle {theta} at index {k} outside [0, 2π)")));
            }
            if !h.is_finite() {
                return Err(Error::InvalidProfile(format!("non-finite support value at index {k}")));
            }
        }
        if let Some(k) = samples.windows(2).position(|w| !(w[1].0 > w[0].0)) {
            return Err(Error::InvalidProfile(format!("angles not strictly increasing at index {}", k + 1)));
        }
        Ok(Self { samples })
    }

    /// Builds a profile from a support function evaluated on a uniform grid.
    pub fn from_fn(n_samples: usize, mut h: impl FnMut(T) -> Result<T>) -> Result<Self> {
        let samples = uniform_angles::<T>(n_samples)
            .into_iter()
            .map(|theta| Ok((theta, h(theta)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(samples)
    }

    pub fn samples(&self) -> &[(T, T)] {
        &self.samples
    }

    pub fn thetas(&self) -> impl Iterator<Item = T> + '_ {
        self.samples.iter().map(|s| s.0)
    }

    pub fn values(&self) -> impl Iterator<Item = T> + '_ {
        self.samples.iter().map(|s| s.1)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Largest `|h_k - other_k|`; both profiles must share the grid.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.len(), other.len(), "profiles sampled on different grids");
        self.values().zip(other.values()).fold(T::zero(), |acc, (a, b)| acc.max((a - b).abs()))
    }
}
