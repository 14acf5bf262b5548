//! Explicit representations of `D(H)` on particle internal spaces, the braid
//! operator on two-particle spaces, and the monodromy.
//!
//! Basis vectors of a particle's internal space are `|h_i, v_j>` with `h_i`
//! running over the flux class (in class-member order) and `v_j` over a
//! unitary model of the charge. Two-particle spaces are ordered left factor
//! major.
//!
//! Convention: under a braid the first particle's flux acts on the second
//! particle, then the factors swap.

use num_complex::Complex;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characters::{CharacterTable, DEFAULT_SEED, MAX_ATTEMPTS};
use crate::double::{FusionTable, Particle, QuantumDouble};
use crate::error::{Error, Result};
use crate::group::{ClassStructure, FiniteGroup, Permutation};
use crate::linalg::{gram_schmidt, hermitian_eigen, CMatrix};
use crate::scalar::{unit_phase, Scalar};

/// A unitary irreducible representation, one matrix per group element
/// (indexed like the group's elements).
#[derive(Clone, Debug)]
pub struct IrrepMatrices<T: Scalar> {
    degree: usize,
    matrices: Vec<CMatrix<T>>,
}

impl<T: Scalar> IrrepMatrices<T> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, element: usize) -> &CMatrix<T> {
        &self.matrices[element]
    }

    pub fn matrices(&self) -> &[CMatrix<T>] {
        &self.matrices
    }
}

/// Builds unitary matrices for irrep `irrep` of `group` by cutting one copy
/// out of the left regular representation.
///
/// The isotypic projector `(d/|G|) sum_g conj(chi(g)) L(g)` gives a
/// `d^2`-dimensional space. A random Hermitian element of the right regular
/// action commutes with `L` and generically splits that space into `d`
/// eigenspaces, each an invariant copy of the irrep.
pub fn irrep_matrices<T: Scalar>(
    group: &FiniteGroup,
    classes: &ClassStructure,
    table: &CharacterTable<T>,
    irrep: usize,
    seed: u64,
) -> Result<IrrepMatrices<T>> {
    if irrep >= table.len() {
        return Err(Error::IndexOutOfRange {
            index: irrep,
            limit: table.len(),
        });
    }
    let n = group.order();
    let chi: Vec<Complex<T>> = (0..n).map(|g| table.value(irrep, classes.class_of(g))).collect();
    let d = table.degree(irrep) as usize;
    if d == 1 {
        return Ok(IrrepMatrices {
            degree: 1,
            matrices: chi.iter().map(|&z| CMatrix::diagonal(&[z])).collect(),
        });
    }

    // column x of the projector: entry y is (d/|G|) conj(chi(y x^-1))
    let scale = T::of(d as f64 / n as f64);
    let columns: Vec<Vec<Complex<T>>> = (0..n)
        .map(|x| (0..n).map(|y| chi[group.mul(y, group.inv(x))].conj() * scale).collect())
        .collect();
    let q = gram_schmidt(&columns, T::of(1e-6));
    if q.len() != d * d {
        return Err(Error::Decomposition { attempts: 0 });
    }
    let q = CMatrix::from_fn(n, d * d, |r, c| q[c][r]);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let coeffs: Vec<Complex<T>> = (0..n)
            .map(|_| Complex::new(T::of(rng.random::<f64>() - 0.5), T::of(rng.random::<f64>() - 0.5)))
            .collect();
        let y = CMatrix::from_fn(n, n, |r, c| {
            coeffs[group.mul(group.inv(r), c)] + coeffs[group.mul(group.inv(c), r)].conj()
        });
        let restricted = &(&q.adjoint() * &y) * &q;
        let clusters = hermitian_eigen(&restricted, T::EIGEN_GAP);
        let Some(first) = clusters.first() else { continue };
        if first.vectors.len() != d {
            continue;
        }
        let u = CMatrix::from_fn(d * d, d, |r, c| first.vectors[c][r]);
        let w = &q * &u;
        let w_adj = w.adjoint();
        let matrices: Vec<CMatrix<T>> = (0..n)
            .map(|g| {
                let lw = CMatrix::from_fn(n, d, |r, c| w[(group.mul(group.inv(g), r), c)]);
                &w_adj * &lw
            })
            .collect();
        let faithful = matrices.iter().zip(&chi).all(|(m, &x)| {
            (m.trace() - x).norm().f64() < T::PRODUCT_TOL && m.unitarity_residual() < T::MATRIX_TOL
        });
        if faithful {
            return Ok(IrrepMatrices { degree: d, matrices });
        }
    }
    Err(Error::Decomposition {
        attempts: MAX_ATTEMPTS,
    })
}

/// Internal Hilbert space `V^A_alpha` of one particle.
#[derive(Clone, Debug)]
pub struct InternalSpace<T: Scalar> {
    particle: Particle,
    /// Group indices of the class members `h_i`.
    members: Vec<usize>,
    /// Group indices of `x_i` with `x_i h_1 x_i^-1 = h_i`.
    transversal: Vec<usize>,
    /// Class position of every group element (if it lies in the class).
    position: Vec<Option<usize>>,
    /// Charge matrices keyed by parent-group index (`None` off the centralizer).
    charge: Vec<Option<CMatrix<T>>>,
    charge_degree: usize,
}

/// Matrix of one group element acting on an internal space.
#[derive(Clone, Debug)]
pub struct GroupActionMatrix<T: Scalar> {
    pub element: Permutation,
    pub matrix: CMatrix<T>,
}

impl<T: Scalar> InternalSpace<T> {
    pub fn new(double: &QuantumDouble<T>, particle: usize, seed: u64) -> Result<Self> {
        let p = double.particle(particle).clone();
        let sector = double.sector(p.class_index);
        let irrep = irrep_matrices(
            &sector.centralizer,
            &sector.centralizer_classes,
            &sector.table,
            p.irrep_index,
            seed,
        )?;
        let group = double.group();
        let class = double.classes().class(p.class_index);
        let mut position = vec![None; group.order()];
        for (i, &m) in class.member_indices.iter().enumerate() {
            position[m] = Some(i);
        }
        let charge = (0..group.order())
            .map(|g| sector.centralizer_index(g).map(|local| irrep.get(local).clone()))
            .collect();
        Ok(Self {
            members: class.member_indices.clone(),
            transversal: sector.transversal.rep_indices.clone(),
            position,
            charge,
            charge_degree: irrep.degree(),
            particle: p,
        })
    }

    pub fn particle(&self) -> &Particle {
        &self.particle
    }

    pub fn dimension(&self) -> usize {
        self.members.len() * self.charge_degree
    }

    /// Basis labels `(class member index, charge index)` in basis order.
    pub fn basis(&self) -> Vec<(usize, usize)> {
        (0..self.members.len())
            .flat_map(|i| (0..self.charge_degree).map(move |j| (i, j)))
            .collect()
    }

    pub fn basis_index(&self, member: usize, charge: usize) -> usize {
        member * self.charge_degree + charge
    }

    /// Group indices of the flux class members.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Image of `|h_i, v_j>` under the group element `g`:
    /// `|g h_i g^-1, alpha(x_k^-1 g x_i) v_j>`.
    pub fn flux_metamorphosis(
        &self,
        group: &FiniteGroup,
        g: usize,
        member: usize,
        charge: usize,
    ) -> Result<Vec<(usize, Complex<T>)>> {
        let (k, m) = self.charge_factor(group, g, member)?;
        Ok((0..self.charge_degree)
            .map(|a| (self.basis_index(k, a), m[(a, charge)]))
            .filter(|(_, z)| !z.is_zero())
            .collect())
    }

    fn charge_factor(&self, group: &FiniteGroup, g: usize, member: usize) -> Result<(usize, &CMatrix<T>)> {
        let target = group.conjugate(g, self.members[member]);
        let k = self.position[target]
            .ok_or_else(|| Error::Internal("conjugate left the flux class".into()))?;
        let c = group.mul(group.mul(group.inv(self.transversal[k]), g), self.transversal[member]);
        let m = self.charge[c]
            .as_ref()
            .ok_or_else(|| Error::Internal("charge factor outside the centralizer".into()))?;
        Ok((k, m))
    }

    /// Matrix of the group element `g` (by index) on this space.
    pub fn action(&self, group: &FiniteGroup, g: usize) -> Result<CMatrix<T>> {
        let dim = self.dimension();
        let deg = self.charge_degree;
        let mut out = CMatrix::zeros(dim, dim);
        for i in 0..self.members.len() {
            let (k, m) = self.charge_factor(group, g, i)?;
            for a in 0..deg {
                for b in 0..deg {
                    out[(k * deg + a, i * deg + b)] = m[(a, b)];
                }
            }
        }
        Ok(out)
    }

    pub fn group_action(&self, group: &FiniteGroup, g: usize) -> Result<GroupActionMatrix<T>> {
        Ok(GroupActionMatrix {
            element: group.element(g).clone(),
            matrix: self.action(group, g)?,
        })
    }
}

/// Internal spaces for every particle of a double, with the braid operator
/// between any two of them.
#[derive(Clone, Debug)]
pub struct Braiding<'a, T: Scalar> {
    double: &'a QuantumDouble<T>,
    spaces: Vec<InternalSpace<T>>,
}

impl<'a, T: Scalar> Braiding<'a, T> {
    pub fn new(double: &'a QuantumDouble<T>) -> Result<Self> {
        Self::with_seed(double, DEFAULT_SEED)
    }

    pub fn with_seed(double: &'a QuantumDouble<T>, seed: u64) -> Result<Self> {
        let spaces = (0..double.len())
            .map(|p| InternalSpace::new(double, p, seed.wrapping_add(p as u64)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { double, spaces })
    }

    pub fn double(&self) -> &QuantumDouble<T> {
        self.double
    }

    pub fn space(&self, p: usize) -> &InternalSpace<T> {
        &self.spaces[p]
    }

    /// `R: V_p (x) V_q -> V_q (x) V_p`,
    /// `|h, v> (x) |h', v'> -> (h . |h', v'>) (x) |h, v>`.
    pub fn braid_matrix(&self, p: usize, q: usize) -> Result<CMatrix<T>> {
        let (sp, sq) = (&self.spaces[p], &self.spaces[q]);
        let group = self.double.group();
        let (dp, dq) = (sp.dimension(), sq.dimension());
        let deg = sp.charge_degree;
        let mut r = CMatrix::zeros(dq * dp, dp * dq);
        for (i, &h) in sp.members.iter().enumerate() {
            let act = sq.action(group, h)?;
            for a in 0..deg {
                let pin = i * deg + a;
                for qin in 0..dq {
                    for u in 0..dq {
                        let z = act[(u, qin)];
                        if !z.is_zero() {
                            r[(u * dp + pin, pin * dq + qin)] = z;
                        }
                    }
                }
            }
        }
        Ok(r)
    }

    /// `R_qp R_pq` on `V_p (x) V_q`.
    pub fn monodromy(&self, p: usize, q: usize) -> Result<CMatrix<T>> {
        Ok(&self.braid_matrix(q, p)? * &self.braid_matrix(p, q)?)
    }

    /// `(1/|H|) tr(R^-2)`; the monodromy is unitary, so this is
    /// `conj(tr M) / |H|`.
    pub fn s_oracle(&self, p: usize, q: usize) -> Result<Complex<T>> {
        let m = self.monodromy(p, q)?;
        Ok(m.trace().conj() / T::of(self.double.group().order() as f64))
    }

    /// Largest entrywise difference between the two sides of the braid
    /// relation on `V_a (x) V_b (x) V_c`:
    /// `(R_bc x 1)(1 x R_ac)(R_ab x 1)` against `(1 x R_ab)(R_ac x 1)(1 x R_bc)`.
    /// For `a = b = c` this is `s1 s2 s1 = s2 s1 s2`.
    pub fn yang_baxter_residual(&self, a: usize, b: usize, c: usize) -> Result<f64> {
        let id = |p: usize| CMatrix::<T>::identity(self.spaces[p].dimension());
        let lhs = &(&self.braid_matrix(b, c)?.kron(&id(a)) * &id(b).kron(&self.braid_matrix(a, c)?))
            * &self.braid_matrix(a, b)?.kron(&id(c));
        let rhs = &(&id(c).kron(&self.braid_matrix(a, b)?) * &self.braid_matrix(a, c)?.kron(&id(b)))
            * &id(a).kron(&self.braid_matrix(b, c)?);
        Ok(lhs.max_abs_diff(&rhs))
    }

    /// `|tr(R^2) - sum_c N^c_pq d_c e^{2 pi i (s_c - s_p - s_q)}|`.
    pub fn spin_statistics_residual(&self, table: &FusionTable, p: usize, q: usize) -> Result<f64> {
        let lhs = self.monodromy(p, q)?.trace();
        let spins = table.spins();
        let rhs = (0..table.len()).fold(Complex::<T>::zero(), |acc, c| {
            let n = table.get(p, q, c);
            if n == 0 {
                return acc;
            }
            let phase = spins[c] - spins[p] - spins[q];
            let phase = *phase.numer() as f64 / *phase.denom() as f64;
            acc + unit_phase::<T>(phase) * T::of(n as f64 * table.dimensions()[c] as f64)
        });
        Ok((lhs - rhs).norm().f64())
    }

    /// Largest difference between the braid oracle and the character
    /// formula over all particle pairs.
    pub fn s_oracle_residual(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for p in 0..self.spaces.len() {
            for q in 0..self.spaces.len() {
                let diff = self.s_oracle(p, q)? - self.double.s_entry(p, q);
                worst = worst.max(diff.norm().f64());
            }
        }
        Ok(worst)
    }
}

/// Scalar multiple of the identity, if `m` is one within `tol`.
pub fn as_scalar<T: Scalar>(m: &CMatrix<T>, tol: f64) -> Option<Complex<T>> {
    if !m.is_square() || m.rows() == 0 {
        return None;
    }
    let z = m[(0, 0)];
    let expected = CMatrix::identity(m.rows()).scale(z);
    (m.max_abs_diff(&expected) < tol).then_some(z)
}

impl<T: Scalar> GroupActionMatrix<T> {
    pub fn is_identity(&self, tol: f64) -> bool {
        as_scalar(&self.matrix, tol).is_some_and(|z| (z - Complex::one()).norm().f64() < tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::FusionTable;
    use crate::group::{named_group, GroupFamily};

    fn double(fam: GroupFamily, n: usize) -> QuantumDouble<f64> {
        QuantumDouble::new(named_group(fam, n).unwrap()).unwrap()
    }

    #[test]
    fn trivial_irrep_is_one() {
        let g = named_group(GroupFamily::Symmetric, 3).unwrap();
        let cs = ClassStructure::new(&g);
        let t = CharacterTable::<f64>::compute(&g, &cs).unwrap();
        let m = irrep_matrices(&g, &cs, &t, 0, 1).unwrap();
        assert_eq!(m.degree(), 1);
        assert!(m.matrices().iter().all(|x| (x[(0, 0)] - Complex::one()).norm() < 1e-15));
    }

    #[test]
    fn s3_two_dimensional_irrep() {
        let g = named_group(GroupFamily::Symmetric, 3).unwrap();
        let cs = ClassStructure::new(&g);
        let t = CharacterTable::<f64>::compute(&g, &cs).unwrap();
        let two = (0..t.len()).find(|&i| t.degree(i) == 2).unwrap();
        let m = irrep_matrices(&g, &cs, &t, two, 7).unwrap();
        for a in 0..g.order() {
            let expected = match g.element(a).order() {
                1 => 2.0,
                2 => 0.0,
                _ => -1.0,
            };
            assert!((m.get(a).trace() - Complex::new(expected, 0.0)).norm() < 1e-8);
            assert!(m.get(a).unitarity_residual() < 1e-9);
            for b in 0..g.order() {
                let prod = m.get(a) * m.get(b);
                assert!(prod.max_abs_diff(m.get(g.mul(a, b))) < 1e-9);
            }
        }
    }

    #[test]
    fn z3_irrep_phase() {
        let g = named_group(GroupFamily::Cyclic, 3).unwrap();
        let cs = ClassStructure::new(&g);
        let t = CharacterTable::<f64>::compute(&g, &cs).unwrap();
        let c = g.index_of(&Permutation::parse("(1,2,3)", 3).unwrap()).unwrap();
        let target = unit_phase::<f64>(1.0 / 3.0);
        let hits = (0..t.len())
            .filter(|&i| {
                let m = irrep_matrices(&g, &cs, &t, i, 0).unwrap();
                (m.get(c)[(0, 0)] - target).norm() < 1e-12
            })
            .count();
        assert_eq!(hits, 1);
    }

    #[test]
    fn a5_five_dimensional_irrep() {
        let g = named_group(GroupFamily::Alternating, 5).unwrap();
        let cs = ClassStructure::new(&g);
        let t = CharacterTable::<f64>::compute(&g, &cs).unwrap();
        let five = (0..t.len()).find(|&i| t.degree(i) == 5).unwrap();
        let m = irrep_matrices(&g, &cs, &t, five, 3).unwrap();
        for a in [1, 7, 30] {
            for b in [2, 11, 59] {
                assert!((m.get(a) * m.get(b)).max_abs_diff(m.get(g.mul(a, b))) < 1e-9);
            }
        }
    }

    #[test]
    fn group_action_is_a_unitary_representation() {
        for (fam, n) in [(GroupFamily::Symmetric, 3), (GroupFamily::Dihedral, 4)] {
            let d = double(fam, n);
            let g = d.group();
            for p in 0..d.len() {
                let space = InternalSpace::new(&d, p, 5).unwrap();
                assert_eq!(space.dimension() as u64, d.particle(p).quantum_dimension);
                assert!(space.group_action(g, g.identity()).unwrap().is_identity(1e-12));
                let mats: Vec<_> = (0..g.order()).map(|x| space.action(g, x).unwrap()).collect();
                for a in 0..g.order() {
                    assert!(mats[a].unitarity_residual() < 1e-9);
                    for b in 0..g.order() {
                        assert!((&mats[a] * &mats[b]).max_abs_diff(&mats[g.mul(a, b)]) < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn transposition_reverses_a_three_cycle_flux() {
        let d = double(GroupFamily::Symmetric, 3);
        let g = d.group();
        let p = d
            .particles()
            .iter()
            .position(|p| p.flux.to_string() == "(1,2,3)")
            .unwrap();
        let space = InternalSpace::new(&d, p, 0).unwrap();
        let swap = g.index_of(&Permutation::parse("(1,2)", 3).unwrap()).unwrap();
        let start = space
            .members()
            .iter()
            .position(|&m| g.element(m).to_string() == "(1,2,3)")
            .unwrap();
        let image = space.flux_metamorphosis(g, swap, start, 0).unwrap();
        assert_eq!(image.len(), 1);
        let (idx, coeff) = image[0];
        let (member, _) = space.basis()[idx];
        assert_eq!(g.element(space.members()[member]).to_string(), "(1,3,2)");
        assert!((coeff.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn vacuum_braids_trivially() {
        let d = double(GroupFamily::Symmetric, 3);
        let b = Braiding::new(&d).unwrap();
        let r = b.braid_matrix(0, 0).unwrap();
        assert_eq!(r.rows(), 1);
        assert!((r[(0, 0)] - Complex::one()).norm() < 1e-15);
        for p in 0..d.len() {
            let m = b.monodromy(0, p).unwrap();
            assert!(m.max_abs_diff(&CMatrix::identity(m.rows())) < 1e-12);
            let m = b.monodromy(p, 0).unwrap();
            assert!(m.max_abs_diff(&CMatrix::identity(m.rows())) < 1e-12);
        }
        assert!((b.s_oracle(0, 0).unwrap() - Complex::new(1.0 / 6.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn braid_is_unitary() {
        let d = double(GroupFamily::Symmetric, 3);
        let b = Braiding::new(&d).unwrap();
        for p in 0..d.len() {
            for q in 0..d.len() {
                assert!(b.braid_matrix(p, q).unwrap().unitarity_residual() < 1e-9);
            }
        }
    }

    #[test]
    fn transposition_flux_pair_monodromy_is_nontrivial() {
        let d = double(GroupFamily::Symmetric, 3);
        let b = Braiding::new(&d).unwrap();
        let p = d
            .particles()
            .iter()
            .position(|p| p.class_size == 3 && p.irrep_index == 0)
            .unwrap();
        let m = b.monodromy(p, p).unwrap();
        assert_eq!(m.rows(), 9);
        assert!(m.max_abs_diff(&CMatrix::identity(9)) > 0.5);
        // entries are unimodular or zero
        for r in 0..9 {
            for c in 0..9 {
                let z = m[(r, c)].norm();
                assert!(z < 1e-12 || (z - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn oracle_matches_character_formula() {
        for (fam, n) in [(GroupFamily::Symmetric, 3), (GroupFamily::Dihedral, 4), (GroupFamily::Cyclic, 4)] {
            let d = double(fam, n);
            let b = Braiding::new(&d).unwrap();
            assert!(b.s_oracle_residual().unwrap() < 1e-8);
        }
    }

    #[test]
    fn yang_baxter_on_s3() {
        let d = double(GroupFamily::Symmetric, 3);
        let b = Braiding::new(&d).unwrap();
        for p in 0..d.len() {
            assert!(b.yang_baxter_residual(p, p, p).unwrap() < 1e-9);
        }
        assert!(b.yang_baxter_residual(3, 5, 7).unwrap() < 1e-9);
    }

    #[test]
    fn spin_statistics_on_s3() {
        let d = double(GroupFamily::Symmetric, 3);
        let md = d.modular_data().unwrap();
        let t = FusionTable::from_modular_data(&md, d.particles()).unwrap();
        let b = Braiding::new(&d).unwrap();
        for p in 0..d.len() {
            for q in 0..d.len() {
                assert!(b.spin_statistics_residual(&t, p, q).unwrap() < 1e-8);
            }
        }
    }

    #[test]
    fn cyclic_self_braid_phase() {
        let n = 5;
        let d = double(GroupFamily::Cyclic, n);
        let b = Braiding::new(&d).unwrap();
        for p in 0..d.len() {
            let r = b.braid_matrix(p, p).unwrap();
            let z = as_scalar(&r, 1e-12).unwrap();
            let s = d.particle(p).spin;
            let expected = unit_phase::<f64>(*s.numer() as f64 / *s.denom() as f64);
            assert!((z - expected).norm() < 1e-9);
        }
    }
}
