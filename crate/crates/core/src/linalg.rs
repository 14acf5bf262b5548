//! Small dense complex matrices and a Hermitian eigensolver.
//!
//! Everything here is sized for the groups this crate targets (matrices of a
//! few hundred rows at most), so the routines favour clarity over blocking.

use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> CMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diagonal(entries: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Complex<T>] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * k).collect(),
        }
    }

    /// Kronecker product, left factor major.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Self::from_fn(rows, cols, |r, c| {
            self[(r / other.rows, c / other.cols)] * other[(r % other.rows, c % other.cols)]
        })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm().f64())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `M M^dagger - I`.
    pub fn unitarity_residual(&self) -> f64 {
        let prod = self * &self.adjoint();
        prod.max_abs_diff(&Self::identity(self.rows))
    }

    /// Largest entrywise modulus of `M - M^T`.
    pub fn symmetry_residual(&self) -> f64 {
        self.max_abs_diff(&self.transpose())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl<T: Scalar> Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.data[r * self.cols + c]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;

    fn mul(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                let rhs_row = rhs.row(k);
                let out_row = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o = *o + a * b;
                }
            }
        }
        out
    }
}

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.
///
/// `a` is row-major `n x n`. Returns eigenvalues in ascending order and the
/// matching orthonormal eigenvectors.
pub fn symmetric_eigen<T: Scalar>(a: &[T], n: usize) -> (Vec<T>, Vec<Vec<T>>) {
    assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let scale = m.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    let threshold = T::epsilon() * scale.max(T::min_positive_value());

    for _sweep in 0..100 {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + m[p * n + q] * m[p * n + q];
            }
        }
        if off.sqrt() <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq.abs() <= T::min_positive_value() {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (apq + apq);
                let mut t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
                if theta < T::zero() {
                    t = -t;
                }
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                m[p * n + p] = app - t * apq;
                m[q * n + q] = aqq + t * apq;
                m[p * n + q] = T::zero();
                m[q * n + p] = T::zero();
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = m[r * n + p];
                    let arq = m[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    m[r * n + p] = new_rp;
                    m[p * n + r] = new_rp;
                    m[r * n + q] = new_rq;
                    m[q * n + r] = new_rq;
                }
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].partial_cmp(&m[j * n + j]).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| m[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|r| v[r * n + i]).collect())
        .collect();
    (values, vectors)
}

/// One eigenvalue of a Hermitian matrix together with an orthonormal basis
/// of its eigenspace.
#[derive(Clone, Debug)]
pub struct EigenCluster<T: Scalar> {
    pub value: T,
    pub vectors: Vec<Vec<Complex<T>>>,
}

/// Eigen-decomposition of a Hermitian matrix, grouping eigenvalues whose
/// consecutive gaps are below `gap`.
///
/// The matrix is embedded as the real symmetric matrix `[[A, -B], [B, A]]`
/// for `H = A + iB`, which doubles every eigenvalue; each cluster of `2m`
/// real eigenvectors spans an `m`-dimensional complex eigenspace, recovered by
/// Gram-Schmidt.
pub fn hermitian_eigen<T: Scalar>(h: &CMatrix<T>, gap: f64) -> Vec<EigenCluster<T>> {
    assert!(h.is_square());
    let n = h.rows();
    let big = 2 * n;
    let mut real = vec![T::zero(); big * big];
    for r in 0..n {
        for c in 0..n {
            let z = h[(r, c)];
            // Hermitian part only; callers may pass matrices with rounding noise.
            let w = (z + h[(c, r)].conj()) * T::of(0.5);
            real[r * big + c] = w.re;
            real[(r + n) * big + (c + n)] = w.re;
            real[r * big + (c + n)] = -w.im;
            real[(r + n) * big + c] = w.im;
        }
    }
    let (values, vectors) = symmetric_eigen(&real, big);

    let mut clusters: Vec<(Vec<T>, Vec<Vec<T>>)> = Vec::new();
    for (value, vector) in values.into_iter().zip(vectors) {
        match clusters.last_mut() {
            Some((vals, vecs)) if (value - *vals.last().unwrap()).f64() < gap => {
                vals.push(value);
                vecs.push(vector);
            }
            _ => clusters.push((vec![value], vec![vector])),
        }
    }

    clusters
        .into_iter()
        .map(|(vals, vecs)| {
            let mean = vals.iter().fold(T::zero(), |a, &b| a + b) / T::of(vals.len() as f64);
            let complex: Vec<Vec<Complex<T>>> = vecs
                .iter()
                .map(|v| (0..n).map(|i| Complex::new(v[i], v[i + n])).collect())
                .collect();
            EigenCluster {
                value: mean,
                vectors: gram_schmidt(&complex, T::of(1e-6)),
            }
        })
        .collect()
}

/// Orthonormalizes `vectors`, dropping any whose residual norm falls below
/// `drop_tol`.
pub fn gram_schmidt<T: Scalar>(vectors: &[Vec<Complex<T>>], drop_tol: T) -> Vec<Vec<Complex<T>>> {
    let mut basis: Vec<Vec<Complex<T>>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        // two passes keep the basis orthonormal to working precision
        for _ in 0..2 {
            for b in &basis {
                let proj = inner(b, &w);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi = *wi - *bi * proj;
                }
            }
        }
        let norm = norm(&w);
        if norm > drop_tol {
            let inv = T::one() / norm;
            basis.push(w.into_iter().map(|z| z * inv).collect());
        }
    }
    basis
}

/// Inner product `<a, b>`, conjugate-linear in `a`.
pub fn inner<T: Scalar>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    a.iter().zip(b).fold(Complex::zero(), |acc, (x, y)| acc + x.conj() * y)
}

pub fn norm<T: Scalar>(a: &[Complex<T>]) -> T {
    a.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn jacobi_reconstructs_symmetric_matrix() {
        let a = [4.0, 1.0, -2.0, 1.0, 2.0, 0.5, -2.0, 0.5, 3.0];
        let (values, vectors) = symmetric_eigen(&a, 3);
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
        for (lambda, v) in values.iter().zip(&vectors) {
            for r in 0..3 {
                let av: f64 = (0..3).map(|k| a[r * 3 + k] * v[k]).sum();
                assert!((av - lambda * v[r]).abs() < 1e-12);
            }
        }
        let trace: f64 = values.iter().sum();
        assert!((trace - 9.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eigen_recovers_complex_eigenvectors() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3
        let h = CMatrix::from_fn(2, 2, |r, c_| match (r, c_) {
            (0, 0) | (1, 1) => c(2.0, 0.0),
            (0, 1) => c(0.0, 1.0),
            _ => c(0.0, -1.0),
        });
        let clusters = hermitian_eigen(&h, 1e-6);
        assert_eq!(clusters.len(), 2);
        assert!((clusters[0].value - 1.0).abs() < 1e-12);
        assert!((clusters[1].value - 3.0).abs() < 1e-12);
        for cl in &clusters {
            assert_eq!(cl.vectors.len(), 1);
            let v = &cl.vectors[0];
            for r in 0..2 {
                let hv = h[(r, 0)] * v[0] + h[(r, 1)] * v[1];
                assert!((hv - v[r] * cl.value).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn degenerate_eigenspace_is_returned_whole() {
        let h = CMatrix::<f64>::diagonal(&[c(1.0, 0.0), c(1.0, 0.0), c(5.0, 0.0)]);
        let clusters = hermitian_eigen(&h, 1e-6);
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].vectors.len(), 2);
        assert_eq!(clusters[1].vectors.len(), 1);
    }

    #[test]
    fn kron_and_trace() {
        let a = CMatrix::from_fn(2, 2, |r, c_| c((r * 2 + c_) as f64, 0.0));
        let b = CMatrix::<f64>::identity(3);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 6);
        assert!((k.trace() - a.trace() * 3.0).norm() < 1e-12);
    }

    #[test]
    fn gram_schmidt_drops_dependent_vectors() {
        let vs = vec![
            vec![c(1.0, 0.0), c(1.0, 0.0)],
            vec![c(2.0, 0.0), c(2.0, 0.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ];
        let basis = gram_schmidt(&vs, 1e-9);
        assert_eq!(basis.len(), 2);
        assert!(inner(&basis[0], &basis[1]).norm() < 1e-12);
    }
}
