//! Dense complex matrices with value semantics.
//!
//! [`ComplexMatrix`] is the universal carrier for every block and factor in
//! the crate. Construction validates finiteness; arithmetic on finite
//! matrices stays finite, so derived values skip re-validation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix, row-major construction order, immutable by
/// convention (all operations return new values).
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting NaN/Inf.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                len: entries.len(),
            });
        }
        let inner = DMatrix::from_row_iterator(rows, cols, entries);
        Self::from_inner_checked(inner)
    }

    /// Builds a matrix from row-major real entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    /// Builds from a closure over (row, col).
    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Result<Self> {
        let inner = DMatrix::from_fn(rows, cols, |i, j| f(i, j));
        Self::from_inner_checked(inner)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            inner: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: DMatrix::identity(n, n),
        }
    }

    /// Diagonal matrix from complex entries.
    pub fn diagonal(entries: &[Complex64]) -> Self {
        let n = entries.len();
        Self {
            inner: DMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    entries[i]
                } else {
                    Complex64::ZERO
                }
            }),
        }
    }

    /// Diagonal matrix from real entries.
    pub fn diagonal_real(entries: &[f64]) -> Self {
        let mapped: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diagonal(&mapped)
    }

    pub(crate) fn from_inner(inner: DMatrix<Complex64>) -> Self {
        Self { inner }
    }

    fn from_inner_checked(inner: DMatrix<Complex64>) -> Result<Self> {
        for j in 0..inner.ncols() {
            for i in 0..inner.nrows() {
                let z = inner[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self { inner })
    }

    pub(crate) fn inner(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    /// Returns a copy with one entry replaced. Used by search code to walk
    /// real/imaginary coordinates; not validated (finite in, finite out).
    pub fn with_entry(&self, row: usize, col: usize, value: Complex64) -> Self {
        let mut inner = self.inner.clone();
        inner[(row, col)] = value;
        Self { inner }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            inner: self.inner.transpose(),
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            inner: self.inner.conjugate(),
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            inner: &self.inner * Complex64::new(factor, 0.0),
        }
    }

    pub fn scale_complex(&self, factor: Complex64) -> Self {
        Self {
            inner: &self.inner * factor,
        }
    }

    /// Frobenius norm, (sum of squared entry moduli)^(1/2).
    pub fn frobenius_norm(&self) -> f64 {
        self.inner.norm()
    }

    /// Largest entry modulus; cheap gauge for scaled comparisons.
    pub fn max_abs(&self) -> f64 {
        self.inner
            .iter()
            .map(|z| z.norm())
            .fold(0.0_f64, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.inner.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Hermitian deviation ||T - T^*||_F / max(1, ||T||_F).
    pub fn hermitian_residual(&self) -> f64 {
        let diff = &self.inner - self.inner.adjoint();
        diff.norm() / 1.0_f64.max(self.inner.norm())
    }

    /// Extracts the sub-block starting at (row, col) with the given shape.
    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Self {
        Self {
            inner: self.inner.view((row, col), (rows, cols)).into_owned(),
        }
    }

    /// Entries in row-major order.
    pub fn entries_row_major(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.inner[(i, j)]);
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            write!(f, "  ")?;
            for j in 0..self.cols() {
                let z = self.inner[(i, j)];
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix {
            inner: -&self.inner,
        }
    }
}
