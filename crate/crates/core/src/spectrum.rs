//! Hermitian eigenvalues by cyclic complex Jacobi rotations, and the
//! spectral predicates built on them.
//!
//! Each rotation first removes the phase of the pivot `a_pq = g e^{i alpha}`
//! with `diag(1, e^{-i alpha})` and then applies the real symmetric Jacobi
//! rotation that zeroes the resulting real `2 x 2` block. The combined
//! unitary `J` is applied as `A <- J* A J` and accumulated into `V <- V J`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

/// Sweeps stop once the off-diagonal Frobenius norm is at most this times `||M||_F`.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Relative scale for nullity, PSD and residual thresholds: `1e-8 max(1, ||M||_F)`.
pub const ZERO_SCALE: f64 = 1e-8;
/// Default relative tolerance for [`Spectrum::cospectral`].
pub const COSPECTRAL_TOLERANCE: f64 = 1e-7;

/// Sorted real eigenvalues of a Hermitian matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    zero_threshold: f64,
    frobenius_norm: f64,
    max_residual: f64,
}

/// Per-run diagnostics of the Jacobi solver.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiTrace {
    /// Off-diagonal Frobenius norm before the first sweep and after each sweep.
    pub off_norms: Vec<f64>,
    pub sweeps: usize,
}

fn off_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    let (app, aqq) = (a[p * n + p].re, a[q * n + q].re);
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + libm::sqrt(theta * theta + 1.0));
        if theta < 0.0 { -t } else { t }
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = phase.conj() * -s;
    let jqq = phase.conj() * c;

    for k in 0..n {
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        a[k * n + p] = akp * jpp + akq * jqp;
        a[k * n + q] = akp * jpq + akq * jqq;
        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
        v[k * n + p] = vkp * jpp + vkq * jqp;
        v[k * n + q] = vkp * jpq + vkq * jqq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p * n + k], a[q * n + k]);
        a[p * n + k] = jpp.conj() * apk + jqp.conj() * aqk;
        a[q * n + k] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;
}

/// Eigenvalues of `m`, ascending, with the run's convergence trace.
pub fn hermitian_eigen_traced(m: &HermitianMatrix) -> Result<(Spectrum, JacobiTrace)> {
    let n = m.dim();
    let norm = m.frobenius_norm();
    let mut a = m.as_slice().to_vec();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }

    let target = JACOBI_TOLERANCE * norm;
    let mut off = off_norm(&a, n);
    let mut off_norms = vec![off];
    let mut sweeps = 0;
    while off > target {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
        off = off_norm(&a, n);
        off_norms.push(off);
    }

    let scale = norm.max(1.0);
    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[i * n + i].re, i)).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut max_residual = 0.0f64;
    for &(lambda, col) in &pairs {
        let x: Vec<Complex64> = (0..n).map(|k| v[k * n + col]).collect();
        let mx = m.mul_vec(&x);
        let r = libm::sqrt(mx.iter().zip(&x).map(|(y, xi)| (y - xi * lambda).norm_sqr()).sum::<f64>());
        max_residual = max_residual.max(r);
    }
    let bound = ZERO_SCALE * scale;
    if max_residual > bound {
        return Err(Error::ResidualTooLarge { residual: max_residual, bound });
    }

    let spectrum = Spectrum {
        eigenvalues: pairs.into_iter().map(|(l, _)| l).collect(),
        zero_threshold: ZERO_SCALE * scale,
        frobenius_norm: norm,
        max_residual,
    };
    Ok((spectrum, JacobiTrace { off_norms, sweeps }))
}

/// All eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &HermitianMatrix) -> Result<Spectrum> {
    hermitian_eigen_traced(m).map(|(s, _)| s)
}

impl Spectrum {
    /// A spectrum from known eigenvalues; `frobenius_norm` sets the zero threshold.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, frobenius_norm: f64) -> Self {
        eigenvalues.sort_by(|a, b| a.total_cmp(b));
        Self { eigenvalues, zero_threshold: ZERO_SCALE * frobenius_norm.max(1.0), frobenius_norm, max_residual: 0.0 }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn zero_threshold(&self) -> f64 {
        self.zero_threshold
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm
    }

    /// Largest `||M v - lambda v||_2` over the computed eigenpairs.
    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// `rho = max |lambda|`.
    pub fn spectral_radius(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }

    /// Number of eigenvalues with `|lambda| <= zero_threshold`.
    pub fn nullity(&self) -> usize {
        self.eigenvalues.iter().filter(|l| l.abs() <= self.zero_threshold).count()
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.min() >= -self.zero_threshold
    }

    /// `max_i |lambda_i - mu_i|` over the sorted lists.
    pub fn max_deviation(&self, other: &Spectrum) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.eigenvalues.iter().zip(&other.eigenvalues).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
    }

    /// Same multiset of eigenvalues within `rel_tol * max(1, rho(self))`.
    pub fn cospectral(&self, other: &Spectrum, rel_tol: f64) -> Result<bool> {
        Ok(self.max_deviation(other)? <= rel_tol * self.spectral_radius().max(1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::UnitGain;
    use crate::graph::GainGraph;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_spectrum(m: &HermitianMatrix, expected: &[f64], tol: f64) {
        let s = hermitian_eigenvalues(m).unwrap();
        assert_eq!(s.dim(), expected.len());
        for (a, b) in s.eigenvalues().iter().zip(expected) {
            assert!((a - b).abs() <= tol, "{:?} vs {:?}", s.eigenvalues(), expected);
        }
    }

    #[test]
    fn known_spectra() {
        // nI - J for n = 3: all-ones eigenvector gives 0, its complement gives 3
        let m = HermitianMatrix::from_upper(3, |i, j| if i == j { c(2.0, 0.0) } else { c(-1.0, 0.0) });
        assert_spectrum(&m, &[0.0, 3.0, 3.0], 1e-12);
        assert_spectrum(&HermitianMatrix::from_real_diagonal(&[4.0, -2.0]), &[-2.0, 4.0], 0.0);
        // unbalanced triangle: A has spectrum (-2, 1, 1) after switching to (K_3, -1), DL = 2I - A
        let t = GainGraph::new(3, [(0, 1, UnitGain::one()), (1, 2, UnitGain::one()), (0, 2, UnitGain::minus_one())]).unwrap();
        let a = crate::laplacian::adjacency_matrix(&t);
        let dl = HermitianMatrix::from_upper(3, |i, j| if i == j { c(2.0, 0.0) } else { -a.get(i, j) });
        assert_spectrum(&dl, &[1.0, 1.0, 4.0], 1e-12);
        // complex 2x2: [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let z = HermitianMatrix::from_upper(2, |i, j| if i == j { c(1.0, 0.0) } else { c(0.0, 1.0) });
        assert_spectrum(&z, &[0.0, 2.0], 1e-14);
    }

    #[test]
    fn predicates() {
        let s = Spectrum::from_eigenvalues(alloc::vec![3.0, 0.0, 3.0], 1.0);
        assert_eq!(s.spectral_radius(), 3.0);
        assert_eq!(s.nullity(), 1);
        assert!(s.is_positive_semidefinite());
        assert_eq!(Spectrum::from_eigenvalues(alloc::vec![-5.0, 1.0], 1.0).spectral_radius(), 5.0);
        assert!(!Spectrum::from_eigenvalues(alloc::vec![-1.0, 1.0], 1.0).is_positive_semidefinite());
        let zero = hermitian_eigenvalues(&HermitianMatrix::zeros(1)).unwrap();
        assert_eq!(zero.nullity(), 1);
        assert!(s.cospectral(&s, COSPECTRAL_TOLERANCE).unwrap());
        assert!(s.cospectral(&zero, 1e-7).is_err());
        // DQ(K_4) = 2I + J
        let dq = HermitianMatrix::from_upper(4, |i, j| if i == j { c(3.0, 0.0) } else { c(1.0, 0.0) });
        let sp = hermitian_eigenvalues(&dq).unwrap();
        assert!((sp.spectral_radius() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn nullity_threshold_scales_with_norm() {
        let big = HermitianMatrix::from_real_diagonal(&[1e-6, 1e3]);
        let s = hermitian_eigenvalues(&big).unwrap();
        assert!(s.zero_threshold() > 1e-6);
        assert_eq!(s.nullity(), 1);
    }

    fn random_hermitian(n: usize, entries: &[(f64, f64)]) -> HermitianMatrix {
        HermitianMatrix::from_upper(n, |i, j| {
            let (re, im) = entries[i * n + j];
            if i == j { c(re * 10.0, 0.0) } else { c(re, im) }
        })
    }

    fn hermitian_strategy(max_n: usize) -> impl Strategy<Value = HermitianMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), n * n).prop_map(move |e| random_hermitian(n, &e))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn jacobi_off_norm_decreases_every_sweep(m in hermitian_strategy(30)) {
            let (s, trace) = hermitian_eigen_traced(&m).unwrap();
            let floor = 1e-14 * m.frobenius_norm();
            for w in trace.off_norms.windows(2) {
                prop_assert!(w[1] <= w[0] + floor, "{:?}", trace.off_norms);
            }
            prop_assert!(trace.sweeps <= JACOBI_MAX_SWEEPS);
            let bound = ZERO_SCALE * m.frobenius_norm().max(1.0);
            prop_assert!(s.max_residual() <= bound);
            let sum: f64 = s.eigenvalues().iter().sum();
            prop_assert!((sum - m.trace()).abs() <= bound);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn unitary_diagonal_similarity_preserves_spectrum(
            m in hermitian_strategy(10),
            angles in prop::collection::vec(-3.2f64..3.2, 10)
        ) {
            let u: Vec<Complex64> = angles[..m.dim()].iter().map(|&t| UnitGain::from_radians(t).to_complex()).collect();
            let s1 = hermitian_eigenvalues(&m).unwrap();
            let s2 = hermitian_eigenvalues(&m.diagonal_similarity(&u)).unwrap();
            prop_assert!(s1.cospectral(&s2, COSPECTRAL_TOLERANCE).unwrap());
        }
    }
}
