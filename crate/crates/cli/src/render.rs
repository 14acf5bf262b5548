use std::fmt::Write as _;

use crate::document::*;

/// A rectangular view of one section.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Free-form lines printed under the table in text mode only.
    pub footer: Vec<String>,
    /// Included in CSV output.
    pub csv: bool,
}

impl Table {
    fn new(title: &str, headers: Vec<String>) -> Self {
        Self {
            title: title.to_string(),
            headers,
            rows: Vec::new(),
            footer: Vec::new(),
            csv: true,
        }
    }
}

fn strings<const N: usize>(items: [&str; N]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn trim_float(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn format_complex(z: Complex) -> String {
    let [re, im] = z;
    let (r, i) = (trim_float(re), trim_float(im));
    match (r.as_str(), i.as_str()) {
        (_, "0") => r,
        ("0", _) => format!("{i}i"),
        _ if i.starts_with('-') => format!("{r}{i}i"),
        _ => format!("{r}+{i}i"),
    }
}

fn format_residual(r: Option<f64>) -> String {
    r.map_or_else(|| "-".to_string(), |x| format!("{x:.3e}"))
}

/// Breaks the document into tables, in a fixed section order.
pub fn tables(doc: &OutputDocument) -> Vec<Table> {
    let s = &doc.sections;
    let mut out = Vec::new();

    if let Some(rows) = &s.particles {
        let mut t = Table::new(
            "particles",
            strings(["label", "flux", "class size", "charge", "charge degree", "spin", "dimension"]),
        );
        t.rows = rows
            .iter()
            .map(|r| {
                vec![
                    r.label.clone(),
                    r.flux.clone(),
                    r.class_size.to_string(),
                    r.charge.clone(),
                    r.charge_degree.to_string(),
                    r.spin.clone(),
                    r.dimension.to_string(),
                ]
            })
            .collect();
        out.push(t);
    }

    if let Some(ct) = &s.character_table {
        let mut headers = strings(["degree"]);
        headers.extend(ct.classes.iter().map(|c| format!("{} [{}]", c.representative, c.size)));
        let mut t = Table::new("character table", headers);
        t.rows = ct
            .characters
            .iter()
            .map(|row| {
                let mut cells = vec![row.degree.to_string()];
                cells.extend(row.values.iter().map(|&z| format_complex(z)));
                cells
            })
            .collect();
        out.push(t);
    }

    if let Some(sm) = &s.smatrix {
        let mut headers = strings(["", "spin"]);
        headers.extend(sm.labels.iter().cloned());
        let mut t = Table::new("S matrix", headers);
        t.rows = sm
            .entries
            .iter()
            .enumerate()
            .map(|(a, row)| {
                let mut cells = vec![sm.labels[a].clone(), sm.spins[a].clone()];
                cells.extend(row.iter().map(|&z| format_complex(z)));
                cells
            })
            .collect();
        out.push(t);
    }

    if let Some(f) = &s.fusion {
        let mut headers = vec![String::new()];
        headers.extend(f.labels.iter().cloned());
        let mut t = Table::new("fusion", headers);
        t.rows = f
            .cells
            .iter()
            .enumerate()
            .map(|(a, row)| {
                let mut cells = vec![f.labels[a].clone()];
                cells.extend(row.iter().cloned());
                cells
            })
            .collect();
        out.push(t);
    }

    if let Some(rows) = &s.probabilities {
        let mut t = Table::new("fusion probabilities", strings(["a", "b", "c", "multiplicity", "probability"]));
        t.rows = rows
            .iter()
            .map(|r| vec![r.a.clone(), r.b.clone(), r.c.clone(), r.multiplicity.to_string(), r.probability.clone()])
            .collect();
        out.push(t);
    }

    if let Some(an) = &s.analysis {
        if let Some(sub) = &an.subsystems {
            let mut t = Table::new("closed subsystems", strings(["size", "particles"]));
            t.rows = sub.sets.iter().map(|set| vec![set.len().to_string(), set.join(" ")]).collect();
            t.footer.push(format!("{} closed sets ({} search)", sub.sets.len(), sub.method));
            out.push(t);
        }
        if let Some(sym) = &an.symmetries {
            let mut t = Table::new("fusion symmetries", strings(["index", "permutation"]));
            t.rows = sym
                .permutations
                .iter()
                .enumerate()
                .map(|(i, p)| vec![(i + 1).to_string(), p.clone()])
                .collect();
            t.footer.push(format!(
                "{} symmetries preserving {} ({} search nodes)",
                sym.permutations.len(),
                sym.profile,
                sym.nodes_visited
            ));
            out.push(t);
        }
        if let Some(c) = &an.consistency {
            let mut t = Table::new("consistency checks", strings(["check", "result", "residual", "detail"]));
            t.rows = c
                .checks
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        if r.passed { "PASS" } else { "FAIL" }.to_string(),
                        format_residual(r.residual),
                        r.detail.clone(),
                    ]
                })
                .collect();
            t.footer.push(format!(
                "group order {}, {} particles, dimension sum {}: {}",
                c.group_order,
                c.particle_count,
                c.dimension_square_sum,
                if c.passed { "all checks passed" } else { "some checks FAILED" }
            ));
            out.push(t);
        }
        if let Some(ab) = &an.abelian {
            let mut t = Table::new("particles", strings(["particle", "antiparticle", "spin", "self-dual"]));
            t.rows = ab
                .particles
                .iter()
                .map(|p| {
                    vec![
                        p.label.clone(),
                        p.antiparticle.clone(),
                        p.spin.clone(),
                        if p.self_dual { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            t.footer = ab.notes.clone();
            t.csv = false;
            out.push(t);

            let mut headers = strings(["theta"]);
            headers.extend(ab.pairs.iter().cloned());
            let mut grid = Table::new("cross sections", headers);
            grid.rows = ab
                .cross_sections
                .iter()
                .map(|row| {
                    let mut cells = vec![trim_float(row.theta)];
                    cells.extend(row.values.iter().map(|v| v.map_or_else(|| "-".to_string(), trim_float)));
                    cells
                })
                .collect();
            grid.footer.push(format!("momentum {}", trim_float(ab.momentum)));
            out.push(grid);
        }
    }
    out
}

pub fn render_text(doc: &OutputDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", doc.group_spec);
    for table in tables(doc) {
        let _ = writeln!(out, "\n== {} ==", table.title);
        let width = table.headers.len();
        let mut widths = vec![0usize; width];
        for row in std::iter::once(&table.headers).chain(&table.rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for row in std::iter::once(&table.headers).chain(&table.rows) {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        for line in &table.footer {
            let _ = writeln!(out, "{line}");
        }
    }
    out
}

pub fn render_csv(doc: &OutputDocument) -> Result<String, csv::Error> {
    let mut chunks = Vec::new();
    for table in tables(doc).into_iter().filter(|t| t.csv) {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&table.headers)?;
        for row in &table.rows {
            writer.write_record(row)?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        chunks.push(String::from_utf8(bytes).expect("csv output is utf-8"));
    }
    Ok(chunks.join("\n"))
}

pub fn render_json(doc: &OutputDocument) -> serde_json::Result<String> {
    serde_json::to_string_pretty(doc).map(|s| s + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex([1.0, 0.0]), "1");
        assert_eq!(format_complex([-0.5, 0.8660254037844386]), "-0.5+0.866025i");
        assert_eq!(format_complex([-0.5, -0.8660254037844386]), "-0.5-0.866025i");
        assert_eq!(format_complex([0.0, 1.0]), "1i");
        assert_eq!(format_complex([-1e-17, 1e-17]), "0");
    }

    #[test]
    fn csv_quotes_cells_with_commas() {
        let mut doc = OutputDocument::new("S3");
        doc.sections.particles = Some(vec![ParticleRow {
            label: "B".into(),
            flux: "(1,2)".into(),
            class_size: 3,
            charge: "irrep1".into(),
            charge_degree: 1,
            spin: "0".into(),
            dimension: 3,
        }]);
        let csv = render_csv(&doc).unwrap();
        assert!(csv.lines().nth(1).unwrap().starts_with("B,\"(1,2)\",3"));
    }
}
