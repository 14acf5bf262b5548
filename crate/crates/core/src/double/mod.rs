//! Particle spectrum of the quantum double `D(H)`.
//!
//! A particle is a conjugacy class `A` of `H` (the flux) together with an
//! irreducible character `alpha` of the centralizer of the class
//! representative (the charge). Its internal space has dimension
//! `|A| * deg(alpha)` and its spin is read off from
//! `alpha(h_A) = e^{2 pi i s} * 1`.

mod fusion;
mod modular;

pub use fusion::{antiparticle, fusion_coefficient, FusionTable};
pub use modular::ModularData;

use std::fmt;

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::Zero;

use crate::characters::{CharacterTable, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::group::{centralizer, right_transversal, ClassStructure, FiniteGroup, Permutation, Transversal};
use crate::scalar::Scalar;

/// Exact topological spin, reduced into `[0, 1)`.
pub type Spin = Ratio<i64>;

/// Everything attached to one flux class: its centralizer, the
/// centralizer's character table, and the conjugating transversal.
#[derive(Clone, Debug)]
pub struct FluxSector<T: Scalar> {
    pub class_index: usize,
    pub centralizer: FiniteGroup,
    pub centralizer_classes: ClassStructure,
    pub table: CharacterTable<T>,
    pub transversal: Transversal,
    /// Parent-group index to centralizer index.
    lookup: Vec<Option<usize>>,
}

impl<T: Scalar> FluxSector<T> {
    /// Centralizer index of the parent-group element `element`, if it lies
    /// in the centralizer.
    pub fn centralizer_index(&self, element: usize) -> Option<usize> {
        self.lookup[element]
    }

    /// Character `irrep` evaluated at the parent-group element `element`.
    pub fn character(&self, irrep: usize, element: usize) -> Option<Complex<T>> {
        let local = self.lookup[element]?;
        Some(self.table.value(irrep, self.centralizer_classes.class_of(local)))
    }
}

/// One anyon type of `D(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Particle {
    pub index: usize,
    pub label: String,
    pub class_index: usize,
    pub irrep_index: usize,
    /// Class representative `h_A`.
    pub flux: Permutation,
    pub class_size: u64,
    pub charge_degree: u64,
    pub quantum_dimension: u64,
    pub spin: Spin,
}

impl Particle {
    pub fn is_vacuum(&self) -> bool {
        self.index == 0
    }

    pub fn is_pure_charge(&self) -> bool {
        self.class_index == 0
    }

    pub fn is_pure_flux(&self) -> bool {
        self.irrep_index == 0
    }
}

impl fmt::Display for Particle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// Spreadsheet-style labels: A..Z, AA, AB, ...
pub fn particle_label(mut index: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (index % 26) as u8);
        if index < 26 {
            break;
        }
        index = index / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

/// The quantum double of a finite group with its particle spectrum.
#[derive(Clone, Debug)]
pub struct QuantumDouble<T: Scalar> {
    group: FiniteGroup,
    classes: ClassStructure,
    sectors: Vec<FluxSector<T>>,
    particles: Vec<Particle>,
}

impl<T: Scalar> QuantumDouble<T> {
    pub fn new(group: FiniteGroup) -> Result<Self> {
        Self::with_seed(group, DEFAULT_SEED)
    }

    /// Builds the spectrum; `seed` drives the character-table eigen-solves
    /// and does not affect the result.
    pub fn with_seed(group: FiniteGroup, seed: u64) -> Result<Self> {
        let classes = ClassStructure::new(&group);
        let mut sectors = Vec::with_capacity(classes.len());
        for class in classes.classes() {
            let cent = centralizer(&group, &class.representative)?;
            let cent_classes = ClassStructure::new(&cent);
            let table = CharacterTable::compute_seeded(&cent, &cent_classes, seed.wrapping_add(class.index as u64))?;
            let mut lookup = vec![None; group.order()];
            for (local, p) in cent.elements().iter().enumerate() {
                let parent = group
                    .index_of(p)
                    .ok_or_else(|| Error::Internal("centralizer element outside group".into()))?;
                lookup[parent] = Some(local);
            }
            sectors.push(FluxSector {
                class_index: class.index,
                transversal: right_transversal(&group, &classes, class.index)?,
                centralizer: cent,
                centralizer_classes: cent_classes,
                table,
                lookup,
            });
        }

        let mut particles = Vec::new();
        for (a, sector) in sectors.iter().enumerate() {
            let class = classes.class(a);
            for alpha in 0..sector.table.len() {
                let index = particles.len();
                let label = particle_label(index);
                let charge_degree = sector.table.degree(alpha);
                let spin = compute_spin(sector, alpha, class.representative_index(), class.representative.order(), &label)?;
                particles.push(Particle {
                    index,
                    label,
                    class_index: a,
                    irrep_index: alpha,
                    flux: class.representative.clone(),
                    class_size: class.size() as u64,
                    charge_degree,
                    quantum_dimension: class.size() as u64 * charge_degree,
                    spin,
                });
            }
        }

        Ok(Self {
            group,
            classes,
            sectors,
            particles,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ClassStructure {
        &self.classes
    }

    pub fn sectors(&self) -> &[FluxSector<T>] {
        &self.sectors
    }

    pub fn sector(&self, class_index: usize) -> &FluxSector<T> {
        &self.sectors[class_index]
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn particle(&self, index: usize) -> &Particle {
        &self.particles[index]
    }

    pub fn len(&self) -> usize {
        self.particles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.particles.is_empty()
    }

    /// Index of the particle with flux class `class_index` and charge `irrep`.
    pub fn particle_index(&self, class_index: usize, irrep: usize) -> Option<usize> {
        self.particles
            .iter()
            .position(|p| p.class_index == class_index && p.irrep_index == irrep)
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.particles.iter().position(|p| p.label == label)
    }

    pub fn quantum_dimensions(&self) -> Vec<u64> {
        self.particles.iter().map(|p| p.quantum_dimension).collect()
    }

    /// `sum_p d_p^2`, which equals `|H|^2` for a semisimple double.
    pub fn dimension_square_sum(&self) -> u64 {
        self.particles.iter().map(|p| p.quantum_dimension.pow(2)).sum()
    }

    /// S-matrix entry from the character double sum
    /// `(1/|H|) sum_{[h_i, h'_j] = e} conj(alpha(x_i^-1 h'_j x_i)) conj(beta(x'_j^-1 h_i x'_j))`.
    pub fn s_entry(&self, p: usize, q: usize) -> Complex<T> {
        let (pa, pb) = (&self.particles[p], &self.particles[q]);
        let (sa, sb) = (&self.sectors[pa.class_index], &self.sectors[pb.class_index]);
        let g = &self.group;
        let class_a = self.classes.class(pa.class_index);
        let class_b = self.classes.class(pb.class_index);
        let mut total = Complex::<T>::zero();
        for (i, &hi) in class_a.member_indices.iter().enumerate() {
            let xi = sa.transversal.rep_indices[i];
            for (j, &hj) in class_b.member_indices.iter().enumerate() {
                if !g.commute(hi, hj) {
                    continue;
                }
                let xj = sb.transversal.rep_indices[j];
                let in_a = g.mul(g.mul(g.inv(xi), hj), xi);
                let in_b = g.mul(g.mul(g.inv(xj), hi), xj);
                let chi_a = sa
                    .character(pa.irrep_index, in_a)
                    .expect("commuting element conjugates into the centralizer");
                let chi_b = sb
                    .character(pb.irrep_index, in_b)
                    .expect("commuting element conjugates into the centralizer");
                total = total + chi_a.conj() * chi_b.conj();
            }
        }
        total / T::of(g.order() as f64)
    }

    /// Modular S and T matrices and charge conjugation.
    pub fn modular_data(&self) -> Result<ModularData<T>> {
        ModularData::from_double(self)
    }
}

fn compute_spin<T: Scalar>(
    sector: &FluxSector<T>,
    irrep: usize,
    flux: usize,
    flux_order: usize,
    label: &str,
) -> Result<Spin> {
    let at_flux = sector.character(irrep, flux).expect("flux centralizes itself");
    let degree = T::of(sector.table.degree(irrep) as f64);
    let z = at_flux / degree;
    let phase = z.im.f64().atan2(z.re.f64()) / (2.0 * std::f64::consts::PI);
    let phase = phase.rem_euclid(1.0);
    let q = flux_order as i64;
    let scaled = phase * q as f64;
    let p = scaled.round();
    let circular = (scaled - p).abs() / q as f64;
    if circular >= T::INTEGER_TOL || (z.norm().f64() - 1.0).abs() >= T::INTEGER_TOL {
        return Err(Error::SpinReconstruction {
            particle: label.to_string(),
            phase,
        });
    }
    Ok(Ratio::new((p as i64).rem_euclid(q), q))
}
