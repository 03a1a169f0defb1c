//! Exact rational scalars and dense matrices over them.
//!
//! Everything downstream (relation spaces, projectors, pairing matrices)
//! is at most 12x12, so matrices are dense and elimination is plain
//! Gauss-Jordan over the rationals.

mod matrix;
mod scalar;

pub use matrix::{Matrix, Rref};
pub use scalar::{ParseScalarError, Scalar};

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeError {
    /// Two operands whose shapes are incompatible for the requested operation.
    Mismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    EntryCount {
        expected: usize,
        found: usize,
    },
    RowLength {
        expected: usize,
        found: usize,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::Mismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            ShapeError::EntryCount { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            ShapeError::RowLength { expected, found } => {
                write!(f, "expected rows of length {expected}, found {found}")
            }
            ShapeError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, not square")
            }
        }
    }
}

impl core::error::Error for ShapeError {}
