use num_complex::Complex;
use num_rational::Ratio;
use num_traits::Zero;

use super::{ModularData, Particle, Spin};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Verlinde fusion coefficient
/// `N^c_{ab} = sum_d S[a][d] S[b][d] conj(S[c][d]) / S[0][d]`.
pub fn fusion_coefficient<T: Scalar>(md: &ModularData<T>, a: usize, b: usize, c: usize) -> Result<u32> {
    let s = &md.s;
    let mut sum = Complex::<T>::zero();
    for d in 0..md.len() {
        let denom = s[(0, d)];
        if denom.norm().f64() < f64::MIN_POSITIVE {
            return Err(Error::ZeroDenominator(d));
        }
        sum = sum + s[(a, d)] * s[(b, d)] * s[(c, d)].conj() / denom;
    }
    let rounded = sum.re.f64().round();
    if (sum.re.f64() - rounded).abs() >= T::INTEGER_TOL || sum.im.f64().abs() >= T::INTEGER_TOL || rounded < 0.0 {
        return Err(Error::NonIntegralFusion {
            a,
            b,
            c,
            value: sum.re.f64(),
        });
    }
    Ok(rounded as u32)
}

/// Integer fusion tensor `N^c_{ab}` with the particle data needed to
/// interpret it.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionTable {
    n: usize,
    coefficients: Vec<u32>,
    labels: Vec<String>,
    dimensions: Vec<u64>,
    spins: Vec<Spin>,
}

impl FusionTable {
    /// Evaluates every Verlinde coefficient and checks the fusion-ring
    /// axioms on the rounded integers.
    pub fn from_modular_data<T: Scalar>(md: &ModularData<T>, particles: &[Particle]) -> Result<Self> {
        let n = md.len();
        let mut coefficients = vec![0; n * n * n];
        for a in 0..n {
            for b in a..n {
                for c in 0..n {
                    let v = fusion_coefficient(md, a, b, c)?;
                    coefficients[(a * n + b) * n + c] = v;
                    coefficients[(b * n + a) * n + c] = v;
                }
            }
        }
        let table = Self {
            n,
            coefficients,
            labels: particles.iter().map(|p| p.label.clone()).collect(),
            dimensions: particles.iter().map(|p| p.quantum_dimension).collect(),
            spins: particles.iter().map(|p| p.spin).collect(),
        };
        let violations = table.invariant_violations();
        if let Some(first) = violations.first() {
            return Err(Error::Internal(format!("fusion table: {first}")));
        }
        Ok(table)
    }

    /// Builds a table from raw data without checking invariants.
    pub fn from_parts(
        coefficients: Vec<u32>,
        labels: Vec<String>,
        dimensions: Vec<u64>,
        spins: Vec<Spin>,
    ) -> Result<Self> {
        let n = labels.len();
        if coefficients.len() != n * n * n || dimensions.len() != n || spins.len() != n {
            return Err(Error::InvalidParameter("fusion table parts have inconsistent sizes".into()));
        }
        Ok(Self {
            n,
            coefficients,
            labels,
            dimensions,
            spins,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `N^c_{ab}`.
    pub fn get(&self, a: usize, b: usize, c: usize) -> u32 {
        self.coefficients[(a * self.n + b) * self.n + c]
    }

    /// Fusion channels of `a x b` with multiplicities.
    pub fn channels(&self, a: usize, b: usize) -> Vec<(usize, u32)> {
        (0..self.n)
            .filter_map(|c| {
                let v = self.get(a, b, c);
                (v > 0).then_some((c, v))
            })
            .collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn dimensions(&self) -> &[u64] {
        &self.dimensions
    }

    pub fn spins(&self) -> &[Spin] {
        &self.spins
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `P(a b -> c) = N^c_{ab} d_c / (d_a d_b)`.
    pub fn probability(&self, a: usize, b: usize, c: usize) -> Ratio<u64> {
        Ratio::new(
            self.get(a, b, c) as u64 * self.dimensions[c],
            self.dimensions[a] * self.dimensions[b],
        )
    }

    /// The unique `b` with `N^0_{ab} >= 1`, if it exists and the
    /// coefficient is exactly 1.
    pub fn dual(&self, a: usize) -> Option<usize> {
        let hits: Vec<usize> = (0..self.n).filter(|&b| self.get(a, b, 0) > 0).collect();
        match hits.as_slice() {
            [b] if self.get(a, *b, 0) == 1 => Some(*b),
            _ => None,
        }
    }

    /// Human-readable list of violated fusion-ring axioms (empty when the
    /// table is consistent).
    pub fn invariant_violations(&self) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.get(a, b, c) != self.get(b, a, c) {
                        out.push(format!("not commutative at ({a},{b},{c})"));
                    }
                }
                let dim: u64 = (0..n).map(|c| self.get(a, b, c) as u64 * self.dimensions[c]).sum();
                if dim != self.dimensions[a] * self.dimensions[b] {
                    out.push(format!("dimension mismatch for {a} x {b}"));
                }
            }
            if (0..n).any(|c| self.get(0, a, c) != u32::from(c == a)) {
                out.push(format!("vacuum does not act as identity on {a}"));
            }
            if self.dual(a).is_none() {
                out.push(format!("particle {a} lacks a unique antiparticle"));
            }
        }
        if !self.is_associative() {
            out.push("not associative".into());
        }
        out
    }

    /// `sum_e N^e_{ab} N^d_{ec} = sum_f N^f_{bc} N^d_{af}` for all a, b, c, d.
    pub fn is_associative(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.channels(a, b);
                for c in 0..n {
                    let bc = self.channels(b, c);
                    for d in 0..n {
                        let left: u64 = ab.iter().map(|&(e, m)| m as u64 * self.get(e, c, d) as u64).sum();
                        let right: u64 = bc.iter().map(|&(f, m)| m as u64 * self.get(a, f, d) as u64).sum();
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Renders `a x b` in the `X + 2.Y` convention (multiplicity, dot, label
    /// when the multiplicity is at least 2).
    pub fn render_product(&self, a: usize, b: usize) -> String {
        self.channels(a, b)
            .into_iter()
            .map(|(c, m)| {
                if m >= 2 {
                    format!("{m}.{}", self.labels[c])
                } else {
                    self.labels[c].clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Antiparticle of `p` from `C = S^2`, cross-checked against the fusion
/// table.
pub fn antiparticle<T: Scalar>(md: &ModularData<T>, table: &FusionTable, p: usize) -> Result<usize> {
    let from_s = md.conjugation[p];
    let from_fusion = table.dual(p);
    if from_fusion != Some(from_s) || table.spins()[p] != table.spins()[from_s] {
        return Err(Error::AntiparticleMismatch {
            particle: p,
            from_s,
            from_fusion,
        });
    }
    Ok(from_s)
}
