//! Complex character tables via Burnside's class-matrix method.
//!
//! The class structure constants are counted exactly. A random Hermitian
//! combination of the (symmetrized) class matrices is diagonalized once; each
//! eigenvector is proportional to the central character
//! `omega_i = |C_i| chi(g_i) / chi(1)` of one irreducible character.

use std::cmp::Ordering;

use num_complex::Complex;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ClassStructure, FiniteGroup, Permutation};
use crate::linalg::{hermitian_eigen, CMatrix};
use crate::scalar::Scalar;

/// Seed used when no explicit generator is supplied.
pub const DEFAULT_SEED: u64 = 0x05ee_d0fc_1a55;

/// Retry budget for eigenvalue separation.
pub const MAX_ATTEMPTS: usize = 20;

/// Structure constants `c[i][j][k] = #{(x, y) in C_i x C_j : x y = z_k}`
/// for a fixed `z_k in C_k`.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    k: usize,
    sizes: Vec<usize>,
    inverse_class: Vec<usize>,
    constants: Vec<u64>,
}

impl ClassAlgebra {
    pub fn class_count(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.constants[(i * self.k + j) * self.k + k]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Index of the class containing the inverses of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }
}

/// Counts class structure constants by enumeration.
pub fn class_structure_constants(group: &FiniteGroup, classes: &ClassStructure) -> ClassAlgebra {
    let k = classes.len();
    let mut constants = vec![0u64; k * k * k];
    for (kk, class) in classes.classes().iter().enumerate() {
        let z = class.representative_index();
        for x in 0..group.order() {
            let y = group.mul(group.inv(x), z);
            let (i, j) = (classes.class_of(x), classes.class_of(y));
            constants[(i * k + j) * k + kk] += 1;
        }
    }
    let inverse_class = classes
        .classes()
        .iter()
        .map(|c| classes.class_of(group.inv(c.representative_index())))
        .collect();
    ClassAlgebra {
        k,
        sizes: classes.sizes(),
        inverse_class,
        constants,
    }
}

/// Irreducible characters of a finite group.
///
/// Rows are irreducible characters, columns follow the canonical class order
/// of [`ClassStructure`]. Row 0 is the trivial character; the remaining rows
/// are sorted by degree, then lexicographically by `(re, im)` values.
#[derive(Clone, Debug)]
pub struct CharacterTable<T: Scalar> {
    group_order: usize,
    class_sizes: Vec<usize>,
    representatives: Vec<Permutation>,
    values: Vec<Vec<Complex<T>>>,
    degrees: Vec<u64>,
}

impl<T: Scalar> CharacterTable<T> {
    /// Computes the table with the default seed.
    pub fn compute(group: &FiniteGroup, classes: &ClassStructure) -> Result<Self> {
        Self::compute_seeded(group, classes, DEFAULT_SEED)
    }

    pub fn compute_seeded(group: &FiniteGroup, classes: &ClassStructure, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::compute_with_rng(group, classes, &mut rng)
    }

    pub fn compute_with_rng<R: Rng>(group: &FiniteGroup, classes: &ClassStructure, rng: &mut R) -> Result<Self> {
        let algebra = class_structure_constants(group, classes);
        let k = algebra.class_count();
        let order = group.order();
        let sizes: Vec<T> = algebra.sizes().iter().map(|&s| T::of(s as f64)).collect();
        let sqrt_sizes: Vec<T> = sizes.iter().map(|s| s.sqrt()).collect();

        // Symmetrized class matrices D^{-1/2} A_i D^{1/2} satisfy
        // A~_i^dagger = A~_{i'} for the inverse class i'.
        let scaled = |i: usize, r: usize, c: usize| {
            T::of(algebra.get(i, r, c) as f64) * sqrt_sizes[c] / sqrt_sizes[r]
        };

        for _attempt in 0..MAX_ATTEMPTS {
            let coeffs: Vec<Complex<T>> = (0..k)
                .map(|_| Complex::new(T::of(rng.random::<f64>() - 0.5), T::of(rng.random::<f64>() - 0.5)))
                .collect();
            let h = CMatrix::from_fn(k, k, |r, c| {
                (0..k).fold(Complex::zero(), |acc, i| {
                    let inv = algebra.inverse_class(i);
                    acc + coeffs[i] * scaled(i, r, c) + coeffs[i].conj() * scaled(inv, r, c)
                })
            });
            let clusters = hermitian_eigen(&h, T::EIGEN_GAP);
            if clusters.len() != k || clusters.iter().any(|c| c.vectors.len() != 1) {
                continue;
            }

            let mut rows = Vec::with_capacity(k);
            for cluster in &clusters {
                let v = &cluster.vectors[0];
                let omega: Vec<Complex<T>> = v.iter().zip(&sqrt_sizes).map(|(&x, &s)| x * s).collect();
                let omega0 = omega[0];
                let omega: Vec<Complex<T>> = omega.into_iter().map(|z| z / omega0).collect();
                let denom = omega
                    .iter()
                    .zip(&sizes)
                    .fold(T::zero(), |acc, (z, &s)| acc + z.norm_sqr() / s);
                let degree = (T::of(order as f64) / denom).sqrt().f64();
                let rounded = degree.round();
                if (degree - rounded).abs() >= T::INTEGER_TOL || rounded < 1.0 {
                    return Err(Error::NonIntegralDegree { value: degree });
                }
                let d = T::of(rounded);
                let chi: Vec<Complex<T>> = omega.iter().zip(&sizes).map(|(&z, &s)| z * d / s).collect();
                rows.push((rounded as u64, chi));
            }

            rows.sort_by(|a, b| canonical_row_cmp(a, b));
            let (degrees, values) = rows.into_iter().unzip();
            return Ok(Self {
                group_order: order,
                class_sizes: algebra.sizes().to_vec(),
                representatives: classes.classes().iter().map(|c| c.representative.clone()).collect(),
                values,
                degrees,
            });
        }
        Err(Error::EigenSeparation {
            attempts: MAX_ATTEMPTS,
        })
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Number of irreducible characters (equal to the number of classes).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, irrep: usize) -> u64 {
        self.degrees[irrep]
    }

    pub fn row(&self, irrep: usize) -> &[Complex<T>] {
        &self.values[irrep]
    }

    pub fn value(&self, irrep: usize, class: usize) -> Complex<T> {
        self.values[irrep][class]
    }

    pub fn rows(&self) -> &[Vec<Complex<T>>] {
        &self.values
    }

    /// Checks orthogonality and the degree-square sum.
    pub fn validate(&self) -> ValidationReport {
        let k = self.len();
        let n = T::of(self.group_order as f64);
        let sizes: Vec<T> = self.class_sizes.iter().map(|&s| T::of(s as f64)).collect();
        let mut row_residual = 0.0f64;
        for r in 0..k {
            for s in 0..k {
                let sum = (0..k).fold(Complex::<T>::zero(), |acc, i| {
                    acc + self.values[r][i] * self.values[s][i].conj() * sizes[i]
                }) / n;
                let expected = if r == s { Complex::one() } else { Complex::zero() };
                row_residual = row_residual.max((sum - expected).norm().f64());
            }
        }
        let mut column_residual = 0.0f64;
        for i in 0..k {
            for j in 0..k {
                let sum = (0..k).fold(Complex::<T>::zero(), |acc, r| {
                    acc + self.values[r][i] * self.values[r][j].conj()
                });
                let expected = if i == j { n / sizes[i] } else { T::zero() };
                // relative to the column norm so large groups are judged fairly
                column_residual = column_residual.max(((sum - expected) / (n / sizes[i])).norm().f64());
            }
        }
        let degree_square_sum: u64 = self.degrees.iter().map(|d| d * d).sum();
        let trivial_first = self.values[0].iter().all(|z| (*z - Complex::one()).norm().f64() < T::PRODUCT_TOL);
        let passed = row_residual < T::PRODUCT_TOL
            && column_residual < T::PRODUCT_TOL
            && degree_square_sum == self.group_order as u64
            && trivial_first;
        ValidationReport {
            row_residual,
            column_residual,
            degree_square_sum,
            group_order: self.group_order as u64,
            trivial_first,
            passed,
        }
    }
}

/// Outcome of [`CharacterTable::validate`].
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub row_residual: f64,
    pub column_residual: f64,
    pub degree_square_sum: u64,
    pub group_order: u64,
    pub trivial_first: bool,
    pub passed: bool,
}

/// Computes the character table with the default seed.
pub fn character_table<T: Scalar>(group: &FiniteGroup) -> Result<CharacterTable<T>> {
    CharacterTable::compute(group, &ClassStructure::new(group))
}

const ORDER_TOL: f64 = 1e-6;

fn approx_cmp(a: f64, b: f64) -> Ordering {
    if (a - b).abs() < ORDER_TOL {
        Ordering::Equal
    } else {
        a.partial_cmp(&b).unwrap_or(Ordering::Equal)
    }
}

fn is_trivial<T: Scalar>(row: &[Complex<T>]) -> bool {
    row.iter().all(|z| (z.re.f64() - 1.0).abs() < ORDER_TOL && z.im.f64().abs() < ORDER_TOL)
}

fn canonical_row_cmp<T: Scalar>(a: &(u64, Vec<Complex<T>>), b: &(u64, Vec<Complex<T>>)) -> Ordering {
    is_trivial(&b.1)
        .cmp(&is_trivial(&a.1))
        .then(a.0.cmp(&b.0))
        .then_with(|| {
            a.1.iter()
                .zip(&b.1)
                .map(|(x, y)| approx_cmp(x.re.f64(), y.re.f64()).then(approx_cmp(x.im.f64(), y.im.f64())))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}
