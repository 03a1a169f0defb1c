#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selfdual_core::reptheory::ParameterPlane;
use selfdual_core::{Matrix, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rationals, zero about one time in six.
pub fn scalar(r: &mut impl Rng) -> Scalar {
    if r.gen_range(0..6) == 0 {
        return Scalar::zero();
    }
    Scalar::ratio(r.gen_range(-9..=9), r.gen_range(1..=5)).unwrap()
}

pub fn nonzero(r: &mut impl Rng) -> Scalar {
    loop {
        let s = scalar(r);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn matrix(r: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| scalar(r)).collect();
    Matrix::from_vec(rows, cols, data).unwrap()
}

pub fn full_rank(r: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    loop {
        let m = matrix(r, rows, cols);
        if m.rank() == rows {
            return m;
        }
    }
}

pub fn plane(r: &mut impl Rng) -> ParameterPlane {
    ParameterPlane::new(&full_rank(r, 2, 4)).unwrap()
}

pub fn pair(r: &mut impl Rng) -> [Scalar; 2] {
    loop {
        let p = [scalar(r), scalar(r)];
        if !(p[0].is_zero() && p[1].is_zero()) {
            return p;
        }
    }
}

pub fn quad(r: &mut impl Rng) -> [Scalar; 4] {
    [scalar(r), scalar(r), scalar(r), scalar(r)]
}

/// Invertible `n×n` matrix.
pub fn invertible(r: &mut impl Rng, n: usize) -> Matrix {
    full_rank(r, n, n)
}

/// Admissible `(a, b)`: `a² ≠ b²`.
pub fn params(r: &mut impl Rng) -> selfdual_core::DualityParams {
    loop {
        let p = selfdual_core::DualityParams::new(scalar(r), scalar(r));
        if p.is_invertible() {
            return p;
        }
    }
}
