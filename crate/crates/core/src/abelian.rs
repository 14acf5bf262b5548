//! Closed-form `Z/N` gauge theory: fusion, braiding phases, self-dual
//! particles and Aharonov-Bohm scattering cross sections, plus a check that
//! the general double machinery reproduces all of it.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex;
use num_rational::Ratio;
use serde::Serialize;

use crate::braiding::{as_scalar, Braiding};
use crate::double::{FusionTable, QuantumDouble, Spin};
use crate::error::{Error, Result};
use crate::group::{named_group, GroupFamily, Permutation};
use crate::scalar::unit_phase;

/// Default largest modulus accepted by [`zn_equivalence_oracle`].
pub const DEFAULT_ORACLE_CAP: u32 = 8;

/// Flux `a` and charge `n` in `Z/N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZNParticle {
    pub modulus: u32,
    pub flux: u32,
    pub charge: u32,
}

impl ZNParticle {
    pub fn new(modulus: u32, flux: u32, charge: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        Ok(Self {
            modulus,
            flux: flux % modulus,
            charge: charge % modulus,
        })
    }

    pub fn vacuum(modulus: u32) -> Self {
        Self {
            modulus,
            flux: 0,
            charge: 0,
        }
    }

    /// All `N^2` particles, flux major.
    pub fn all(modulus: u32) -> Vec<Self> {
        (0..modulus)
            .flat_map(|a| (0..modulus).map(move |n| Self { modulus, flux: a, charge: n }))
            .collect()
    }

    pub fn antiparticle(&self) -> Self {
        let m = self.modulus;
        Self {
            modulus: m,
            flux: (m - self.flux) % m,
            charge: (m - self.charge) % m,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.antiparticle()
    }

    /// `a n / N` reduced mod 1.
    pub fn spin(&self) -> Spin {
        let m = self.modulus as u64;
        Ratio::new(((self.flux as u64 * self.charge as u64) % m) as i64, m as i64)
    }
}

impl fmt::Display for ZNParticle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.flux, self.charge)
    }
}

fn same_modulus(p: &ZNParticle, q: &ZNParticle) -> Result<u32> {
    if p.modulus != q.modulus {
        return Err(Error::ModulusMismatch(p.modulus, q.modulus));
    }
    Ok(p.modulus)
}

/// `|a,n> x |a',n'> = |a+a', n+n'>`.
pub fn zn_fuse(p: &ZNParticle, q: &ZNParticle) -> Result<ZNParticle> {
    let m = same_modulus(p, q)?;
    Ok(ZNParticle {
        modulus: m,
        flux: (p.flux + q.flux) % m,
        charge: (p.charge + q.charge) % m,
    })
}

/// Exchange phase of two identical particles, `e^{2 pi i n a / N}`.
pub fn zn_braid_phase(p: &ZNParticle) -> Complex<f64> {
    let m = p.modulus as u64;
    unit_phase((p.flux as u64 * p.charge as u64 % m) as f64 / m as f64)
}

/// Exponent `k` of the monodromy phase `e^{2 pi i k / N}`, `k = n a' + n' a`.
pub fn zn_monodromy_exponent(p: &ZNParticle, q: &ZNParticle) -> Result<u32> {
    let m = same_modulus(p, q)? as u64;
    Ok(((p.charge as u64 * q.flux as u64 + q.charge as u64 * p.flux as u64) % m) as u32)
}

/// Full-winding phase `e^{2 pi i (n a' + n' a) / N}`.
pub fn zn_monodromy_phase(p: &ZNParticle, q: &ZNParticle) -> Result<Complex<f64>> {
    let k = zn_monodromy_exponent(p, q)?;
    Ok(unit_phase(k as f64 / p.modulus as f64))
}

/// Self-dual particles of the `Z/N` theory.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MajoranaReport {
    pub modulus: u32,
    pub self_dual: Vec<ZNParticle>,
    pub notes: Vec<String>,
}

/// Every particle equal to its own antiparticle: `2a = 2n = 0 mod N`.
pub fn zn_majorana(modulus: u32) -> Result<MajoranaReport> {
    if modulus == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    let self_dual: Vec<ZNParticle> = ZNParticle::all(modulus).into_iter().filter(ZNParticle::is_self_dual).collect();
    let mut notes = Vec::new();
    if modulus.is_multiple_of(2) {
        let h = modulus / 2;
        notes.push(format!(
            "besides the dyon ({h},{h}), the pure flux ({h},0) and pure charge (0,{h}) are also self-dual"
        ));
    }
    Ok(MajoranaReport {
        modulus,
        self_dual,
        notes,
    })
}

fn check_scattering_domain(momentum: f64, theta: f64) -> Result<()> {
    if !(momentum > 0.0 && momentum.is_finite()) {
        return Err(Error::Domain(format!("momentum must be positive, got {momentum}")));
    }
    if !(theta > 0.0 && theta < 2.0 * PI) {
        return Err(Error::Domain(format!("scattering angle must lie in (0, 2pi), got {theta}")));
    }
    Ok(())
}

/// `d sigma / d theta = sin^2(pi (n a' + n' a) / N) / (2 pi p sin^2(theta/2))`.
pub fn cross_section_distinguishable(p: &ZNParticle, q: &ZNParticle, momentum: f64, theta: f64) -> Result<f64> {
    check_scattering_domain(momentum, theta)?;
    let k = zn_monodromy_exponent(p, q)?;
    let num = (PI * k as f64 / p.modulus as f64).sin().powi(2);
    Ok(num / (2.0 * PI * momentum * (theta / 2.0).sin().powi(2)))
}

/// Identical-particle cross section with the exchange term,
/// `s (1/sin^2(theta/2) + 1/cos^2(theta/2)) / (2 pi p)` where
/// `s = sin^2(2 pi n a / N)`.
///
/// The angle inside `sin^2` is taken as written, `2 pi n a / N`, which is
/// twice the half-monodromy angle used by the distinguishable formula.
pub fn cross_section_identical(p: &ZNParticle, momentum: f64, theta: f64) -> Result<f64> {
    check_scattering_domain(momentum, theta)?;
    if (theta - PI).abs() < 1e-12 {
        return Err(Error::Domain("exchange term is singular at theta = pi".into()));
    }
    let m = p.modulus as u64;
    let na = (p.flux as u64 * p.charge as u64 % m) as f64;
    let s = (2.0 * PI * na / m as f64).sin().powi(2);
    let denom = 2.0 * PI * momentum;
    Ok(s / (denom * (theta / 2.0).sin().powi(2)) + s / (denom * (theta / 2.0).cos().powi(2)))
}

/// Outcome of running the general pipeline on the cyclic group.
#[derive(Clone, Debug, Serialize)]
pub struct ZnEquivalenceReport {
    pub modulus: u32,
    pub particle_count: usize,
    /// `Z/N` label of each double particle, in double order.
    pub mapping: Vec<ZNParticle>,
    pub fusion_checked: usize,
    pub max_monodromy_residual: f64,
    pub max_braid_residual: f64,
}

/// Builds `Z/N` as a permutation group, runs the double pipeline, and checks
/// fusion, monodromy, self-braiding and spins against the closed forms.
pub fn zn_equivalence_oracle(modulus: u32) -> Result<ZnEquivalenceReport> {
    zn_equivalence_oracle_with_cap(modulus, DEFAULT_ORACLE_CAP)
}

pub fn zn_equivalence_oracle_with_cap(modulus: u32, cap: u32) -> Result<ZnEquivalenceReport> {
    if modulus == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    if modulus > cap {
        return Err(Error::OrderCapExceeded { cap: cap as usize });
    }
    let n = modulus as usize;
    let group = named_group(GroupFamily::Cyclic, n)?;
    let generator = if n == 1 {
        Permutation::identity(1)
    } else {
        Permutation::from_cycles(n, &[(1..=n).collect()])?
    };
    let double = QuantumDouble::<f64>::new(group)?;
    let g_index = double
        .group()
        .index_of(&generator)
        .ok_or_else(|| Error::Internal("generator missing from cyclic group".into()))?;

    let mismatch = |what: String| Err(Error::Internal(format!("Z/{modulus} oracle: {what}")));

    let mut powers = vec![0u32; double.group().order()];
    let mut x = double.group().identity();
    for k in 0..n {
        powers[x] = k as u32;
        x = double.group().mul(g_index, x);
    }

    let mut mapping = Vec::with_capacity(double.len());
    for p in double.particles() {
        let sector = double.sector(p.class_index);
        let flux_index = double.classes().class(p.class_index).representative_index();
        let chi = sector
            .character(p.irrep_index, g_index)
            .ok_or_else(|| Error::Internal("cyclic centralizer is the whole group".into()))?;
        let turns = (chi.im.atan2(chi.re) / (2.0 * PI)).rem_euclid(1.0) * n as f64;
        let charge = turns.round();
        if (turns - charge).abs() > 1e-6 {
            return mismatch(format!("charge of {} is not an N-th root of unity", p.label));
        }
        mapping.push(ZNParticle::new(modulus, powers[flux_index], charge as u32 % modulus)?);
    }
    if double.len() != n * n {
        return mismatch(format!("{} particles instead of {}", double.len(), n * n));
    }
    let mut seen = mapping.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != n * n {
        return mismatch("particle labels are not distinct".into());
    }

    for (p, z) in double.particles().iter().zip(&mapping) {
        if p.spin != z.spin() {
            return mismatch(format!("spin of {z} is {} instead of {}", p.spin, z.spin()));
        }
    }

    let md = double.modular_data()?;
    let table = FusionTable::from_modular_data(&md, double.particles())?;
    let mut fusion_checked = 0;
    for a in 0..double.len() {
        for b in 0..double.len() {
            let fused = zn_fuse(&mapping[a], &mapping[b])?;
            for c in 0..double.len() {
                let expected = u32::from(mapping[c] == fused);
                if table.get(a, b, c) != expected {
                    return mismatch(format!("N^{}_{}{} = {}", mapping[c], mapping[a], mapping[b], table.get(a, b, c)));
                }
                fusion_checked += 1;
            }
        }
    }

    let braiding = Braiding::new(&double)?;
    let mut max_monodromy_residual = 0.0f64;
    let mut max_braid_residual = 0.0f64;
    for a in 0..double.len() {
        for b in 0..double.len() {
            let m = braiding.monodromy(a, b)?;
            let z = as_scalar(&m, 1e-9).ok_or_else(|| Error::Internal("abelian monodromy is not 1x1".into()))?;
            max_monodromy_residual = max_monodromy_residual.max((z - zn_monodromy_phase(&mapping[a], &mapping[b])?).norm());
        }
        let r = braiding.braid_matrix(a, a)?;
        let z = as_scalar(&r, 1e-9).ok_or_else(|| Error::Internal("abelian braid is not 1x1".into()))?;
        max_braid_residual = max_braid_residual.max((z - zn_braid_phase(&mapping[a])).norm());
    }
    if max_monodromy_residual >= 1e-8 || max_braid_residual >= 1e-8 {
        return mismatch(format!(
            "phase residuals {max_monodromy_residual:e} (monodromy), {max_braid_residual:e} (braid)"
        ));
    }

    Ok(ZnEquivalenceReport {
        modulus,
        particle_count: double.len(),
        mapping,
        fusion_checked,
        max_monodromy_residual,
        max_braid_residual,
    })
}
