#![allow(dead_code)]

use num_complex::Complex;
use numrange::{MatrixF64, Operator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type C = Complex<f64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in the closed unit disk.
pub fn unit_disk(rng: &mut impl Rng) -> C {
    let r = rng.gen::<f64>().sqrt();
    C::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

pub fn random_word(rng: &mut impl Rng, period: usize) -> Vec<C> {
    (0..period).map(|_| unit_disk(rng)).collect()
}

/// Period uniform in `2..=5`, every entry in the unit disk.
pub fn random_operator(rng: &mut impl Rng) -> Operator {
    let period = rng.gen_range(2..=5);
    let a = random_word(rng, period);
    let b = random_word(rng, period);
    let c = random_word(rng, period);
    Operator::new(a, b, c).unwrap()
}

pub fn random_corpus(seed: u64, count: usize) -> Vec<Operator> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_operator(&mut rng)).collect()
}

/// Real 2-periodic `a`, `c` in `[-1, 1]`, `b = 0`.
pub fn random_real_two_periodic(rng: &mut impl Rng) -> Operator {
    let mut w = || [rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)];
    let (a, c) = (w(), w());
    Operator::from_real(&a, &[0.0, 0.0], &c).unwrap()
}

/// `t I + x Re(m) + y Im(m)`.
pub fn pencil_matrix(m: &MatrixF64, t: f64, x: f64, y: f64) -> MatrixF64 {
    let n = m.rows();
    let lin = &m.hermitian_part().scale(C::new(x, 0.0)) + &m.skew_hermitian_part().scale(C::new(y, 0.0));
    &MatrixF64::identity(n).scale(C::new(t, 0.0)) + &lin
}

pub fn thetas(n: usize) -> Vec<f64> {
    numrange::numrange::uniform_angles::<f64>(n)
}
