use alloc::vec::Vec;

use super::Polynomial;
use crate::exactmath::Matrix;

/// A dense matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: alloc::vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Polynomial) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        PolyMatrix::from_fn(m.rows(), m.cols(), |r, c| {
            Polynomial::constant(m[(r, c)].clone())
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.data[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// `None` on a shape mismatch.
    pub fn mul(&self, other: &PolyMatrix) -> Option<PolyMatrix> {
        if self.cols != other.rows {
            return None;
        }
        Some(PolyMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Polynomial::zero();
            for k in 0..self.cols {
                let (x, y) = (self.get(r, k), other.get(k, c));
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        }))
    }

    pub fn add(&self, other: &PolyMatrix) -> Option<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        Some(PolyMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) + other.get(r, c)
        }))
    }

    pub fn sub(&self, other: &PolyMatrix) -> Option<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        Some(PolyMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) - other.get(r, c)
        }))
    }

    /// Sub-block with rows `r0..r0+h` and columns `c0..c0+w`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> PolyMatrix {
        PolyMatrix::from_fn(h, w, |r, c| self.get(r0 + r, c0 + c).clone())
    }
}
