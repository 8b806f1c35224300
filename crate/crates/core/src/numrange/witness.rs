use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::operator::CouplingForms;
use crate::scalar::Real;

/// The explicit 4x4 matrix `S` with `W(S) = closure W(T)` for period 2,
/// real `a`, `c` and `b = 0`:
///
/// ```text
/// [ α0+α1   -γ0     -γ1     0     ]
/// [ -γ0    -α0+α1    0     -γ1    ]
/// [ -γ1      0     α0-α1   -γ0    ]
/// [  0      -γ1     -γ0   -α0-α1  ]
/// ```
pub fn explicit_matrix_2periodic<T: Real>(forms: &CouplingForms<T>) -> Result<ComplexMatrix<T>> {
    if forms.period() != 2 {
        return Err(Error::PreconditionViolated(format!("explicit witness needs period 2, got {}", forms.period())));
    }
    if !forms.is_real_zero_diagonal(T::PATTERN_TOL) {
        return Err(Error::PreconditionViolated("explicit witness needs real a, c and zero b".into()));
    }
    let (a0, a1) = (forms.alpha[0], forms.alpha[1]);
    let (g0, g1) = (-forms.gamma[0], -forms.gamma[1]);
    let z = Complex::new(T::zero(), T::zero());
    Ok(ComplexMatrix::from_rows(&[
        vec![a0 + a1, g0, g1, z],
        vec![g0, a1 - a0, z, g1],
        vec![g1, z, a0 - a1, g0],
        vec![z, g1, g0, -a0 - a1],
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::PeriodicTridiagonal;

    #[test]
    fn quartic_example_witness() {
        let forms = PeriodicTridiagonal::from_real(&[1.0, 3.0], &[0.0, 0.0], &[4.0, 8.0]).unwrap().coupling_forms();
        let s = explicit_matrix_2periodic(&forms).unwrap();
        let row0 = [Complex::new(8.0, 0.0), Complex::new(0.0, 0.5), Complex::new(0.0, -3.5), Complex::new(0.0, 0.0)];
        for (j, want) in row0.iter().enumerate() {
            assert!((s[(0, j)] - want).norm() < 1e-15, "S[0][{j}] = {}", s[(0, j)]);
        }
        assert!((s[(1, 1)] - Complex::new(1.0, 0.0)).norm() < 1e-15);
        assert!((s[(2, 2)] - Complex::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((s[(3, 3)] - Complex::new(-8.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn vanishing_gammas_give_diagonal_witness() {
        // c0 = a1 and c1 = a0 make both γ vanish.
        let forms = PeriodicTridiagonal::from_real(&[2.0, 0.5], &[0.0, 0.0], &[0.5, 2.0]).unwrap().coupling_forms();
        let s = explicit_matrix_2periodic(&forms).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(s[(i, j)].norm(), 0.0);
                }
            }
        }
        let diag: Vec<f64> = (0..4).map(|k| s[(k, k)].re).collect();
        assert_eq!(diag, vec![2.5, 1.5, -1.5, -2.5]);
    }

    #[test]
    fn gamma_one_vanishes_when_a0_equals_c1() {
        let forms = PeriodicTridiagonal::from_real(&[1.0, -1.0], &[0.0, 0.0], &[1.0, 1.0]).unwrap().coupling_forms();
        let s = explicit_matrix_2periodic(&forms).unwrap();
        // Block diagonal: {0,1} and {2,3} decouple.
        for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            assert_eq!(s[(i, j)].norm(), 0.0);
            assert_eq!(s[(j, i)].norm(), 0.0);
        }
    }

    #[test]
    fn rejects_out_of_scope_operators() {
        let three = PeriodicTridiagonal::from_real(&[1.0; 3], &[0.0; 3], &[1.0; 3]).unwrap().coupling_forms();
        assert!(matches!(explicit_matrix_2periodic(&three), Err(Error::PreconditionViolated(_))));
        let diag = PeriodicTridiagonal::from_real(&[1.0; 2], &[0.5, 0.0], &[1.0; 2]).unwrap().coupling_forms();
        assert!(explicit_matrix_2periodic(&diag).is_err());
        let complex = PeriodicTridiagonal::new(
            vec![Complex::new(1.0, 1.0), Complex::new(1.0, 0.0)],
            vec![Complex::new(0.0, 0.0); 2],
            vec![Complex::new(1.0, 0.0); 2],
        )
        .unwrap()
        .coupling_forms();
        assert!(explicit_matrix_2periodic(&complex).is_err());
    }
}
