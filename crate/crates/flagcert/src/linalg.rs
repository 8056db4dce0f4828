//! Exact rational matrices and positive definiteness.
//!
//! Positive definiteness is decided exactly: clear denominators, then run
//! fraction-free (Bareiss) elimination, whose pivots are the leading
//! principal minors of the integer matrix. A symmetric matrix is positive
//! definite iff every leading principal minor is positive, and scaling by
//! the positive denominator lcm preserves those signs. No floating point.

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix dimensions must be positive, got {0}x{1}")]
    BadDimensions(usize, usize),
    #[error("entry count {0} does not match {1}x{2}")]
    BadEntryCount(usize, usize, usize),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is not symmetric (first mismatch at ({0}, {1}))")]
    NotSymmetric(usize, usize),
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    Mismatch(usize, usize, usize, usize),
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<RationalMatrix, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::BadDimensions(rows, cols));
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::BadEntryCount(entries.len(), rows, cols));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Mismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = out.get_mut(i, j);
                    *cell = &*cell + a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    fn symmetry_defect(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((self.rows, self.cols));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Exact positive-definiteness decision for a symmetric rational matrix:
/// all leading principal minors positive, computed by fraction-free
/// elimination on the denominator-cleared integer matrix.
pub fn is_positive_definite(m: &RationalMatrix) -> Result<bool, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare(m.rows, m.cols));
    }
    if let Some((i, j)) = m.symmetry_defect() {
        return Err(LinalgError::NotSymmetric(i, j));
    }
    let n = m.rows;
    // clear denominators; positive scaling preserves minor signs
    let mut lcm = BigInt::one();
    for e in &m.entries {
        lcm = num::integer::lcm(lcm, e.denom().clone());
    }
    let mut a: Vec<BigInt> = m
        .entries
        .iter()
        .map(|e| e.numer() * (&lcm / e.denom()))
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = a[k * n + k].clone();
        if !pivot.is_positive() {
            return Ok(false);
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &pivot * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                // Bareiss: exactly divisible by the previous pivot
                a[i * n + j] = num / &prev;
            }
        }
        prev = pivot;
    }
    Ok(true)
}

/// xᵀ M x, exact.
pub fn quadratic_form(m: &RationalMatrix, x: &[Rat]) -> Rat {
    let n = m.rows();
    let mut out = Rat::zero();
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if x[j].is_zero() {
                continue;
            }
            out += &x[i] * m.get(i, j) * &x[j];
        }
    }
    out
}
