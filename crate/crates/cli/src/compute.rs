use std::f64::consts::PI;

use anyonkit::abelian::{self, ZNParticle};
use anyonkit::analysis::{self, ReportOptions, SubsystemMethod, SymmetryProfile};
use anyonkit::characters::{CharacterTable, DEFAULT_SEED};
use anyonkit::double::{FusionTable, ModularData, QuantumDouble};
use anyonkit::group::{parse_generators, parse_group_name, ClassStructure, FiniteGroup};
use anyonkit::{Error, Result};
use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::document::*;

/// How the group was given on the command line.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Named(String),
    Generators { text: String, degree: usize },
}

impl GroupSpec {
    pub fn echo(&self) -> String {
        match self {
            Self::Named(name) => name.clone(),
            Self::Generators { text, degree } => format!("{text} on {degree} points"),
        }
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        let group = match self {
            Self::Named(name) => parse_group_name(name)?,
            Self::Generators { text, degree } => {
                let gens = parse_generators(text, *degree)?;
                FiniteGroup::generate_with_cap(&gens, max_order)?
            }
        };
        if group.order() > max_order {
            return Err(Error::OrderCapExceeded { cap: max_order });
        }
        Ok(group)
    }
}

/// The double and everything derived from it, built once per command.
pub struct Pipeline {
    pub double: QuantumDouble<f64>,
    pub modular: ModularData<f64>,
    pub fusion: FusionTable,
}

impl Pipeline {
    pub fn new(group: FiniteGroup, seed: u64) -> Result<Self> {
        let double = QuantumDouble::with_seed(group, seed)?;
        let modular = double.modular_data()?;
        let fusion = FusionTable::from_modular_data(&modular, double.particles())?;
        Ok(Self {
            double,
            modular,
            fusion,
        })
    }
}

pub fn seed_or_default(seed: Option<u64>) -> u64 {
    seed.unwrap_or(DEFAULT_SEED)
}

fn complex(z: num_complex::Complex<f64>) -> Complex {
    [z.re, z.im]
}

pub fn ratio_string(r: Ratio<i64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn particles(double: &QuantumDouble<f64>) -> Vec<ParticleRow> {
    double
        .particles()
        .iter()
        .map(|p| ParticleRow {
            label: p.label.clone(),
            flux: p.flux.to_string(),
            class_size: p.class_size,
            charge: format!("irrep{}", p.irrep_index + 1),
            charge_degree: p.charge_degree,
            spin: ratio_string(p.spin),
            dimension: p.quantum_dimension,
        })
        .collect()
}

pub fn character_table(group: &FiniteGroup, seed: u64) -> Result<CharacterTableSection> {
    let classes = ClassStructure::new(group);
    let table = CharacterTable::<f64>::compute_seeded(group, &classes, seed)?;
    Ok(CharacterTableSection {
        classes: table
            .representatives()
            .iter()
            .zip(table.class_sizes())
            .map(|(rep, &size)| ClassColumn {
                representative: rep.to_string(),
                size,
            })
            .collect(),
        characters: (0..table.len())
            .map(|i| CharacterRow {
                degree: table.degree(i),
                values: table.row(i).iter().copied().map(complex).collect(),
            })
            .collect(),
    })
}

pub fn smatrix(p: &Pipeline) -> SMatrixSection {
    let n = p.modular.len();
    SMatrixSection {
        labels: p.fusion.labels().to_vec(),
        spins: p.fusion.spins().iter().map(|&s| ratio_string(s)).collect(),
        entries: (0..n)
            .map(|a| (0..n).map(|b| complex(p.modular.s[(a, b)])).collect())
            .collect(),
    }
}

pub fn fusion(table: &FusionTable) -> FusionSection {
    let n = table.len();
    FusionSection {
        labels: table.labels().to_vec(),
        cells: (0..n)
            .map(|a| (0..n).map(|b| table.render_product(a, b)).collect())
            .collect(),
    }
}

fn lookup(table: &FusionTable, label: &str) -> Result<usize> {
    table
        .index_of(label)
        .ok_or_else(|| Error::InvalidParameter(format!("no particle labelled {label:?}")))
}

/// Every nonzero `P(a b -> c)`, optionally restricted to given `a` and `b`.
pub fn probabilities(
    table: &FusionTable,
    a: Option<&str>,
    b: Option<&str>,
    decimal: bool,
) -> Result<Vec<ProbabilityRow>> {
    let n = table.len();
    let pick = |label: Option<&str>| -> Result<Vec<usize>> {
        match label {
            Some(l) => Ok(vec![lookup(table, l)?]),
            None => Ok((0..n).collect()),
        }
    };
    let (left, right) = (pick(a)?, pick(b)?);
    let mut rows = Vec::new();
    for &x in &left {
        for &y in &right {
            if a.is_none() && b.is_none() && y < x {
                continue;
            }
            for (c, m) in table.channels(x, y) {
                let p = table.probability(x, y, c);
                let probability = if decimal {
                    format!("{:.6}", p.to_f64().unwrap_or(f64::NAN))
                } else if *p.denom() == 1 {
                    p.numer().to_string()
                } else {
                    format!("{}/{}", p.numer(), p.denom())
                };
                rows.push(ProbabilityRow {
                    a: table.label(x).to_string(),
                    b: table.label(y).to_string(),
                    c: table.label(c).to_string(),
                    multiplicity: m,
                    probability,
                });
            }
        }
    }
    Ok(rows)
}

pub fn subsystems(table: &FusionTable) -> SubsystemsSection {
    let report = analysis::closed_subsystems(table);
    SubsystemsSection {
        method: match report.method {
            SubsystemMethod::Exhaustive => "exhaustive",
            SubsystemMethod::GeneratedClosure => "generated-closure",
        }
        .to_string(),
        sets: report.labels,
    }
}

fn label_cycles(labels: &[String], image: &[usize]) -> String {
    let mut seen = vec![false; image.len()];
    let mut out = String::new();
    for start in 0..image.len() {
        if seen[start] || image[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(labels[x].as_str());
            x = image[x];
        }
        out.push_str(&format!("({})", cycle.join(",")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub fn symmetries(table: &FusionTable, dimension_only: bool) -> Result<SymmetriesSection> {
    let profile = if dimension_only {
        SymmetryProfile::DimensionOnly
    } else {
        SymmetryProfile::DimensionAndSpin
    };
    let report = analysis::fusion_symmetries(table, profile)?;
    Ok(SymmetriesSection {
        profile: if dimension_only { "dimension-only" } else { "dimension-and-spin" }.to_string(),
        nodes_visited: report.nodes_visited,
        permutations: report
            .permutations
            .iter()
            .map(|img| label_cycles(table.labels(), img))
            .collect(),
    })
}

pub fn consistency(group: &FiniteGroup, seed: u64) -> ConsistencySection {
    let options = ReportOptions {
        seed,
        ..ReportOptions::default()
    };
    let report = analysis::consistency_report_with::<f64>(group, options);
    ConsistencySection {
        passed: report.passed,
        group_order: report.group_order,
        particle_count: report.particle_count,
        dimension_square_sum: report.dimension_square_sum,
        checks: report
            .checks
            .into_iter()
            .map(|c| CheckRow {
                name: c.name,
                passed: c.passed,
                residual: c.residual,
                detail: c.detail,
            })
            .collect(),
    }
}

/// Parses `a,n` into a particle of the `Z/N` theory.
pub fn parse_zn_particle(text: &str, modulus: u32) -> Result<ZNParticle> {
    let bad = || Error::Parse {
        text: text.to_string(),
        reason: "expected flux,charge".into(),
    };
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, n) = t.split_once(',').ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let n: u32 = n.trim().parse().map_err(|_| bad())?;
    ZNParticle::new(modulus, a, n)
}

/// Parses `a,n:a',n'`.
pub fn parse_zn_pair(text: &str, modulus: u32) -> Result<(ZNParticle, ZNParticle)> {
    let (p, q) = text.split_once(':').ok_or_else(|| Error::Parse {
        text: text.to_string(),
        reason: "expected a,n:a',n'".into(),
    })?;
    Ok((parse_zn_particle(p, modulus)?, parse_zn_particle(q, modulus)?))
}

pub fn abelian(modulus: u32, pairs: &[(ZNParticle, ZNParticle)], momentum: f64, angles: usize) -> Result<AbelianSection> {
    let majorana = abelian::zn_majorana(modulus)?;
    let particles = ZNParticle::all(modulus)
        .into_iter()
        .map(|p| AbelianParticleRow {
            label: p.to_string(),
            antiparticle: p.antiparticle().to_string(),
            spin: ratio_string(p.spin()),
            self_dual: p.is_self_dual(),
        })
        .collect();

    let mut columns = Vec::new();
    for (p, q) in pairs {
        columns.push(format!("{p}x{q}"));
        if p == q {
            columns.push(format!("{p}x{q} identical"));
        }
    }
    let mut grid = Vec::with_capacity(angles);
    for k in 1..=angles {
        let theta = 2.0 * PI * k as f64 / (angles + 1) as f64;
        let mut values = Vec::new();
        for (p, q) in pairs {
            values.push(Some(abelian::cross_section_distinguishable(p, q, momentum, theta)?));
            if p == q {
                values.push(abelian::cross_section_identical(p, momentum, theta).ok());
            }
        }
        grid.push(CrossSectionRow { theta, values });
    }
    Ok(AbelianSection {
        modulus,
        momentum,
        particles,
        notes: majorana.notes,
        pairs: columns,
        cross_sections: grid,
    })
}
