//! Particle tables transcribed from the reference tables, and matching of
//! their labels onto computed particles.

#![allow(dead_code)]

use std::collections::HashMap;

use anyonkit::double::{FusionTable, ModularData, QuantumDouble, Spin};
use anyonkit::group::{named_group, GroupFamily, Permutation};
use num_rational::Ratio;

pub struct Row {
    pub label: &'static str,
    pub flux: &'static str,
    pub degree: u64,
    /// `None` where the table gives no spin.
    pub spin: Option<(i64, i64)>,
}

const fn row(label: &'static str, flux: &'static str, degree: u64, spin: (i64, i64)) -> Row {
    Row {
        label,
        flux,
        degree,
        spin: Some(spin),
    }
}

const fn nospin(label: &'static str, flux: &'static str, degree: u64) -> Row {
    Row {
        label,
        flux,
        degree,
        spin: None,
    }
}

pub const S3: &[Row] = &[
    row("A", "()", 1, (0, 1)),
    row("B", "()", 1, (0, 1)),
    row("C", "()", 2, (0, 1)),
    row("D", "(1,2)", 1, (0, 1)),
    row("E", "(1,2)", 1, (1, 2)),
    row("F", "(1,2,3)", 1, (0, 1)),
    row("G", "(1,2,3)", 1, (1, 3)),
    row("H", "(1,2,3)", 1, (2, 3)),
];

pub const A5: &[Row] = &[
    row("A", "()", 1, (0, 1)),
    row("B", "()", 3, (0, 1)),
    row("C", "()", 3, (0, 1)),
    row("D", "()", 4, (0, 1)),
    row("E", "()", 5, (0, 1)),
    row("F", "(1,2)(3,4)", 1, (0, 1)),
    row("G", "(1,2)(3,4)", 1, (0, 1)),
    row("H", "(1,2)(3,4)", 1, (1, 2)),
    row("I", "(1,2)(3,4)", 1, (1, 2)),
    row("J", "(1,2,3)", 1, (0, 1)),
    row("K", "(1,2,3)", 1, (1, 3)),
    row("L", "(1,2,3)", 1, (2, 3)),
    row("M", "(1,2,3,4,5)", 1, (0, 1)),
    row("N", "(1,2,3,4,5)", 1, (1, 5)),
    row("O", "(1,2,3,4,5)", 1, (2, 5)),
    row("P", "(1,2,3,4,5)", 1, (3, 5)),
    row("Q", "(1,2,3,4,5)", 1, (4, 5)),
    row("R", "(1,2,3,5,4)", 1, (0, 1)),
    row("S", "(1,2,3,5,4)", 1, (1, 5)),
    row("T", "(1,2,3,5,4)", 1, (2, 5)),
    row("U", "(1,2,3,5,4)", 1, (3, 5)),
    row("V", "(1,2,3,5,4)", 1, (4, 5)),
];

pub const A4: &[Row] = &[
    row("A", "()", 1, (0, 1)),
    row("B", "()", 1, (0, 1)),
    row("C", "()", 1, (0, 1)),
    row("D", "()", 3, (0, 1)),
    row("E", "(1,2)(3,4)", 1, (0, 1)),
    row("F", "(1,2)(3,4)", 1, (0, 1)),
    row("G", "(1,2)(3,4)", 1, (1, 2)),
    row("H", "(1,2)(3,4)", 1, (1, 2)),
    row("I", "(1,2,3)", 1, (0, 1)),
    row("J", "(1,2,3)", 1, (1, 3)),
    row("K", "(1,2,3)", 1, (2, 3)),
    row("L", "(1,3,2)", 1, (0, 1)),
    row("M", "(1,3,2)", 1, (2, 3)),
    row("N", "(1,3,2)", 1, (1, 3)),
];

/// Charge degrees are not printed for this table; they follow from the
/// centralizers named alongside it (S4, D4, Z2 x Z2, Z3, Z4).
pub const S4: &[Row] = &[
    row("A", "()", 1, (0, 1)),
    row("B", "()", 1, (0, 1)),
    row("C", "()", 2, (0, 1)),
    row("D", "()", 3, (0, 1)),
    row("E", "()", 3, (0, 1)),
    row("F", "(1,2)(3,4)", 1, (0, 1)),
    row("G", "(1,2)(3,4)", 1, (0, 1)),
    row("H", "(1,2)(3,4)", 1, (0, 1)),
    row("I", "(1,2)(3,4)", 1, (0, 1)),
    row("J", "(1,2)(3,4)", 2, (1, 2)),
    row("K", "(1,2)", 1, (0, 1)),
    row("L", "(1,2)", 1, (0, 1)),
    row("M", "(1,2)", 1, (1, 2)),
    row("N", "(1,2)", 1, (1, 2)),
    row("O", "(1,2,3)", 1, (0, 1)),
    row("P", "(1,2,3)", 1, (1, 3)),
    row("Q", "(1,2,3)", 1, (2, 3)),
    row("R", "(1,2,3,4)", 1, (0, 1)),
    row("S", "(1,2,3,4)", 1, (1, 4)),
    row("T", "(1,2,3,4)", 1, (1, 2)),
    row("U", "(1,2,3,4)", 1, (3, 4)),
];

pub const D4: &[Row] = &[
    nospin("A", "()", 1),
    nospin("B", "()", 1),
    nospin("C", "()", 1),
    nospin("D", "()", 1),
    nospin("E", "()", 2),
    nospin("F", "(1,3)(2,4)", 1),
    nospin("G", "(1,3)(2,4)", 1),
    nospin("H", "(1,3)(2,4)", 1),
    nospin("I", "(1,3)(2,4)", 1),
    nospin("J", "(1,3)(2,4)", 2),
    nospin("K", "(1,4)(2,3)", 1),
    nospin("L", "(1,4)(2,3)", 1),
    nospin("M", "(1,4)(2,3)", 1),
    nospin("N", "(1,4)(2,3)", 1),
    nospin("O", "(2,4)", 1),
    nospin("P", "(2,4)", 1),
    nospin("Q", "(2,4)", 1),
    nospin("R", "(2,4)", 1),
    nospin("S", "(1,2,3,4)", 1),
    nospin("T", "(1,2,3,4)", 1),
    nospin("U", "(1,2,3,4)", 1),
    nospin("V", "(1,2,3,4)", 1),
];

pub fn spin(r: (i64, i64)) -> Spin {
    Ratio::new(r.0, r.1)
}

/// A computed double with its modular data and fusion table.
pub struct Theory {
    pub name: &'static str,
    pub double: QuantumDouble<f64>,
    pub md: ModularData<f64>,
    pub table: FusionTable,
}

impl Theory {
    pub fn build(name: &'static str, family: GroupFamily, n: usize) -> Self {
        let double = QuantumDouble::new(named_group(family, n).expect("group")).expect("double");
        let md = double.modular_data().expect("modular data");
        let table = FusionTable::from_modular_data(&md, double.particles()).expect("fusion table");
        Self {
            name,
            double,
            md,
            table,
        }
    }
}

/// Matches reference labels to computed particle indices by the signature
/// (class of the printed flux, charge degree, spin). Rows sharing a
/// signature are paired in order, which puts trivial charges first on both
/// sides. Returns `Err` describing the first row without a partner, or any
/// computed particle left unmatched.
pub fn match_labels(double: &QuantumDouble<f64>, rows: &[Row]) -> Result<HashMap<&'static str, usize>, String> {
    let g = double.group();
    let mut used = vec![false; double.len()];
    let mut out = HashMap::new();
    for r in rows {
        let flux = Permutation::parse(r.flux, g.degree()).map_err(|e| e.to_string())?;
        let class = double
            .classes()
            .class_of(g.index_of(&flux).ok_or_else(|| format!("{} not in group", r.flux))?);
        let hit = double.particles().iter().position(|p| {
            !used[p.index]
                && p.class_index == class
                && p.charge_degree == r.degree
                && r.spin.is_none_or(|s| p.spin == spin(s))
        });
        match hit {
            Some(i) => {
                used[i] = true;
                out.insert(r.label, i);
            }
            None => return Err(format!("no computed particle for row {} ({}, deg {})", r.label, r.flux, r.degree)),
        }
    }
    if let Some(i) = used.iter().position(|u| !u) {
        return Err(format!("computed particle {} has no reference row", double.particle(i).label));
    }
    Ok(out)
}

/// Inverse of [`match_labels`]: reference label of each computed particle.
pub fn reference_names(map: &HashMap<&'static str, usize>, len: usize) -> Vec<&'static str> {
    let mut out = vec!["?"; len];
    for (&label, &i) in map {
        out[i] = label;
    }
    out
}

/// `a x b` written with reference labels, e.g. `"C + H"`.
pub fn render_with(table: &FusionTable, names: &[&str], a: usize, b: usize) -> String {
    let mut terms: Vec<(String, u32)> = table
        .channels(a, b)
        .into_iter()
        .map(|(c, m)| (names[c].to_string(), m))
        .collect();
    terms.sort();
    terms
        .into_iter()
        .map(|(l, m)| if m >= 2 { format!("{m}.{l}") } else { l })
        .collect::<Vec<_>>()
        .join(" + ")
}
