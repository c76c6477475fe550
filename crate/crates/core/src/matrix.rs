//! Dense complex matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Inputs further than this from Hermitian are rejected by [`HermitianMatrix::from_rows`].
pub const HERMITIAN_INPUT_TOLERANCE: f64 = 1e-10;

/// Largest `|a_ji - conj(a_ij)|` over all pairs, including imaginary parts of
/// the diagonal.
pub fn hermitian_deviation(rows: &[Vec<Complex64>]) -> Result<f64> {
    let n = rows.len();
    let mut worst = 0.0f64;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: i, len: row.len(), n });
        }
        for j in i..n {
            worst = worst.max((rows[j][i] - row[j].conj()).norm());
        }
    }
    Ok(worst)
}

/// Dense `n x n` Hermitian matrix. The stored lower triangle is always the
/// exact conjugate of the upper triangle and the diagonal is real.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    /// Fills the upper triangle from `f(i, j)`, `i <= j`, and mirrors it.
    pub fn from_upper<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(f(i, i).re, 0.0);
            for j in i + 1..n {
                let z = f(i, j);
                m.data[i * n + j] = z;
                m.data[j * n + i] = z.conj();
            }
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_upper(n, |i, j| if i == j { Complex64::new(diag[i], 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    /// Accepts rows within [`HERMITIAN_INPUT_TOLERANCE`] of Hermitian and
    /// stores the Hermitian part `(M + M*) / 2`.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let deviation = hermitian_deviation(rows)?;
        if deviation > HERMITIAN_INPUT_TOLERANCE {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self::from_upper(rows.len(), |i, j| (rows[i][j] + rows[j][i].conj()) * 0.5))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i).re).collect()
    }

    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `|M|`, the matrix of entry moduli.
    pub fn entrywise_modulus(&self) -> HermitianMatrix {
        Self::from_upper(self.n, |i, j| Complex64::new(self.get(i, j).norm(), 0.0))
    }

    /// `U* M U` for the diagonal unitary `U = diag(u)`.
    pub fn diagonal_similarity(&self, u: &[Complex64]) -> HermitianMatrix {
        assert_eq!(u.len(), self.n, "dimension mismatch");
        Self::from_upper(self.n, |i, j| u[i].conj() * self.get(i, j) * u[j])
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.n).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn scale(&self, k: f64) -> HermitianMatrix {
        Self { n: self.n, data: self.data.iter().map(|z| z * k).collect() }
    }
}

impl Add for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn add(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        HermitianMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn sub(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        HermitianMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

/// Dense rectangular complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.cols + j] = z;
    }

    /// `M M*` as a dense row-major `rows x rows` array.
    pub fn mul_adjoint(&self) -> Vec<Complex64> {
        let r = self.rows;
        let mut out = vec![Complex64::new(0.0, 0.0); r * r];
        for i in 0..r {
            for k in 0..r {
                out[i * r + k] = (0..self.cols).map(|j| self.get(i, j) * self.get(k, j).conj()).sum();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn from_rows_validates_and_symmetrizes() {
        let rows = vec![vec![c(1.0, 0.0), c(2.0, 1.0)], vec![c(2.0, -1.0 + 1e-12), c(3.0, 0.0)]];
        let m = HermitianMatrix::from_rows(&rows).unwrap();
        assert_eq!(m.get(1, 0), m.get(0, 1).conj());
        let bad = vec![vec![c(1.0, 0.0), c(2.0, 1.0)], vec![c(2.0, 1.0), c(3.0, 0.0)]];
        assert!(matches!(HermitianMatrix::from_rows(&bad), Err(Error::NotHermitian { .. })));
        let ragged = vec![vec![c(1.0, 0.0)], vec![c(2.0, 1.0), c(3.0, 0.0)]];
        assert!(matches!(HermitianMatrix::from_rows(&ragged), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn basic_algebra() {
        let a = HermitianMatrix::from_real_diagonal(&[1.0, 2.0]);
        let b = HermitianMatrix::from_upper(2, |i, j| if i == j { c(0.0, 0.0) } else { c(0.0, 1.0) });
        let s = &a + &b;
        assert_eq!(s.get(1, 0), c(0.0, -1.0));
        assert_eq!((&s - &b), a);
        assert_eq!(s.trace(), 3.0);
        assert_eq!(b.entrywise_modulus().get(0, 1), c(1.0, 0.0));
        let u = [c(0.0, 1.0), c(1.0, 0.0)];
        // conj(i) * i * 1 = 1
        assert_eq!(b.diagonal_similarity(&u).get(0, 1), c(1.0, 0.0));
        assert_eq!(s.mul_vec(&[c(1.0, 0.0), c(0.0, 0.0)]), vec![c(1.0, 0.0), c(0.0, -1.0)]);
    }
}
