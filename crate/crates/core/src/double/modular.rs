use num_complex::Complex;
use num_traits::{One, Zero};

use super::QuantumDouble;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::{unit_phase, Scalar};

/// Modular S and T matrices of `D(H)` with the charge-conjugation
/// permutation `C = S^2`.
#[derive(Clone, Debug)]
pub struct ModularData<T: Scalar> {
    pub s: CMatrix<T>,
    /// Diagonal of T: `e^{2 pi i s_p}`.
    pub t: Vec<Complex<T>>,
    /// `conjugation[p]` is the antiparticle of `p`.
    pub conjugation: Vec<usize>,
    pub group_order: usize,
    pub dimensions: Vec<u64>,
}

impl<T: Scalar> ModularData<T> {
    pub fn from_double(double: &QuantumDouble<T>) -> Result<Self> {
        let n = double.len();
        let mut s = CMatrix::zeros(n, n);
        for p in 0..n {
            for q in p..n {
                let v = double.s_entry(p, q);
                s[(p, q)] = v;
                s[(q, p)] = v;
            }
        }
        let t = double
            .particles()
            .iter()
            .map(|p| unit_phase(*p.spin.numer() as f64 / *p.spin.denom() as f64))
            .collect();
        let conjugation = permutation_from_matrix(&(&s * &s), T::MATRIX_TOL)?;
        Ok(Self {
            s,
            t,
            conjugation,
            group_order: double.group().order(),
            dimensions: double.quantum_dimensions(),
        })
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn t_matrix(&self) -> CMatrix<T> {
        CMatrix::diagonal(&self.t)
    }

    /// Max `|S - S^T|`.
    pub fn symmetry_residual(&self) -> f64 {
        self.s.symmetry_residual()
    }

    /// Max `|S S^dagger - I|`.
    pub fn unitarity_residual(&self) -> f64 {
        self.s.unitarity_residual()
    }

    /// Max `|(ST)^3 - S^2|`.
    pub fn modular_relation_residual(&self) -> f64 {
        let st = &self.s * &self.t_matrix();
        st.pow(3).max_abs_diff(&self.s.pow(2))
    }

    /// Max `|S^2 - C|` for the rounded permutation matrix `C`.
    pub fn conjugation_residual(&self) -> f64 {
        let n = self.len();
        let c = CMatrix::from_fn(n, n, |r, col| {
            if self.conjugation[r] == col {
                Complex::one()
            } else {
                Complex::zero()
            }
        });
        self.s.pow(2).max_abs_diff(&c)
    }

    pub fn conjugation_is_involution(&self) -> bool {
        self.conjugation
            .iter()
            .enumerate()
            .all(|(p, &q)| self.conjugation[q] == p)
    }

    /// Max `|S[0][q] - d_q / |H||`.
    pub fn vacuum_row_residual(&self) -> f64 {
        let h = self.group_order as f64;
        self.dimensions
            .iter()
            .enumerate()
            .map(|(q, &d)| (self.s[(0, q)] - Complex::new(T::of(d as f64 / h), T::zero())).norm().f64())
            .fold(0.0, f64::max)
    }
}

fn permutation_from_matrix<T: Scalar>(m: &CMatrix<T>, tol: f64) -> Result<Vec<usize>> {
    let n = m.rows();
    let mut perm = Vec::with_capacity(n);
    for r in 0..n {
        let mut hit = None;
        for c in 0..n {
            let z = m[(r, c)];
            let near_one = (z - Complex::one()).norm().f64() < tol;
            let near_zero = z.norm().f64() < tol;
            match (near_one, near_zero, hit) {
                (true, _, None) => hit = Some(c),
                (false, true, _) => {}
                _ => return Err(Error::ConjugationNotPermutation { row: r }),
            }
        }
        perm.push(hit.ok_or(Error::ConjugationNotPermutation { row: r })?);
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, GroupFamily};

    fn md(fam: GroupFamily, n: usize) -> ModularData<f64> {
        QuantumDouble::new(named_group(fam, n).unwrap())
            .unwrap()
            .modular_data()
            .unwrap()
    }

    #[test]
    fn z2_s_matrix_entries() {
        let m = md(GroupFamily::Cyclic, 2);
        assert_eq!(m.len(), 4);
        for r in 0..4 {
            for c in 0..4 {
                let z = m.s[(r, c)];
                assert!(z.im.abs() < 1e-12);
                assert!((z.re.abs() - 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn s3_is_self_conjugate() {
        let m = md(GroupFamily::Symmetric, 3);
        assert_eq!(m.conjugation, (0..8).collect::<Vec<_>>());
        assert!(m.symmetry_residual() < 1e-9);
        assert!(m.unitarity_residual() < 1e-9);
        assert!(m.modular_relation_residual() < 1e-8);
        assert!(m.vacuum_row_residual() < 1e-12);
    }

    #[test]
    fn a4_swaps_the_complex_charges() {
        let d = QuantumDouble::<f64>::new(named_group(GroupFamily::Alternating, 4).unwrap()).unwrap();
        let m = d.modular_data().unwrap();
        let moved_charges: Vec<usize> = (0..m.len())
            .filter(|&p| m.conjugation[p] != p && d.particle(p).is_pure_charge())
            .collect();
        assert_eq!(moved_charges.len(), 2);
        assert!(moved_charges.iter().all(|&p| d.particle(p).quantum_dimension == 1));
        // the two 3-cycle classes are mutually inverse, so their fluxes swap too
        for p in d.particles() {
            let q = d.particle(m.conjugation[p.index]);
            assert_eq!(p.spin, q.spin);
            assert_eq!(p.class_size, q.class_size);
            let swapped = p.class_size == 4;
            assert_eq!(p.class_index != q.class_index, swapped);
        }
        assert!(m.conjugation_is_involution());
        assert!(m.modular_relation_residual() < 1e-8);
    }

    #[test]
    fn rejects_non_permutation() {
        let m = CMatrix::<f64>::from_fn(2, 2, |_, _| Complex::new(0.5, 0.0));
        assert!(permutation_from_matrix(&m, 1e-9).is_err());
        assert_eq!(
            permutation_from_matrix(&CMatrix::<f64>::identity(3), 1e-9).unwrap(),
            vec![0, 1, 2]
        );
    }
}
