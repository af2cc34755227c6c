#![allow(dead_code)]

use num_traits::Zero;
use postlie::linalg::{int, rat, zero_vector};
use postlie::{Matrix, Rational, Vector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn random_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_vector(rng: &mut impl Rng, d: usize) -> Vector {
    (0..d).map(|_| random_rational(rng)).collect()
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows((0..rows).map(|_| random_vector(rng, cols)).collect())
}

pub fn random_invertible(rng: &mut impl Rng, d: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, d, d);
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// 4×4 block matrix of `Σ v_k B_k` with `B = (E12, E21, E11-E22, E34, E43, E33-E44)`.
pub fn to_gl4(v: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for (block, o) in [(0usize, 0usize), (3, 2)] {
        let (x, y, h) = (&v[block], &v[block + 1], &v[block + 2]);
        m[(o, o + 1)] = x.clone();
        m[(o + 1, o)] = y.clone();
        m[(o, o)] = h.clone();
        m[(o + 1, o + 1)] = -h.clone();
    }
    m
}

pub fn from_gl4(m: &Matrix) -> Vector {
    let mut v = zero_vector(6);
    for (block, o) in [(0usize, 0usize), (3, 2)] {
        v[block] = m[(o, o + 1)].clone();
        v[block + 1] = m[(o + 1, o)].clone();
        v[block + 2] = m[(o, o)].clone();
    }
    v
}

/// `{x, y}` in `sl2 ⊕ sl2` computed as a matrix commutator.
pub fn commutator(x: &[Rational], y: &[Rational]) -> Vector {
    let (a, b) = (to_gl4(x), to_gl4(y));
    from_gl4(&(&(&a * &b) - &(&b * &a)))
}

/// Checks the weight-`w` identity on vectors with the commutator bracket.
pub fn rb_on_vectors(r: &Matrix, w: &Rational, x: &[Rational], y: &[Rational]) -> bool {
    let (rx, ry) = (r.apply(x), r.apply(y));
    let lhs = commutator(&rx, &ry);
    let mut inner = commutator(&rx, y);
    for (a, b) in inner.iter_mut().zip(commutator(x, &ry)) {
        *a += b;
    }
    for (a, b) in inner.iter_mut().zip(commutator(x, y)) {
        *a += w * b;
    }
    lhs == r.apply(&inner)
}

pub fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| int(x)).collect()
}
