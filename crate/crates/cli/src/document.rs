use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "anyonkit/1";

/// Everything a command produces. Text, CSV and JSON are all rendered from
/// this one value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub group_spec: String,
    pub sections: Sections,
}

impl OutputDocument {
    pub fn new(group_spec: impl Into<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            group_spec: group_spec.into(),
            sections: Sections::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Sections {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub particles: Option<Vec<ParticleRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character_table: Option<CharacterTableSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smatrix: Option<SMatrixSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fusion: Option<FusionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probabilities: Option<Vec<ProbabilityRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParticleRow {
    pub label: String,
    pub flux: String,
    pub class_size: u64,
    pub charge: String,
    pub charge_degree: u64,
    pub spin: String,
    pub dimension: u64,
}

/// Complex number as `[re, im]`.
pub type Complex = [f64; 2];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassColumn {
    pub representative: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub degree: u64,
    pub values: Vec<Complex>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTableSection {
    pub classes: Vec<ClassColumn>,
    pub characters: Vec<CharacterRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SMatrixSection {
    pub labels: Vec<String>,
    pub spins: Vec<String>,
    pub entries: Vec<Vec<Complex>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionSection {
    pub labels: Vec<String>,
    /// `cells[a][b]` is `a x b` written as `X + 2.Y`.
    pub cells: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityRow {
    pub a: String,
    pub b: String,
    pub c: String,
    pub multiplicity: u32,
    pub probability: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subsystems: Option<SubsystemsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetries: Option<SymmetriesSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub consistency: Option<ConsistencySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelian: Option<AbelianSection>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubsystemsSection {
    pub method: String,
    pub sets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetriesSection {
    pub profile: String,
    pub nodes_visited: u64,
    /// Each symmetry in cycle notation on labels; `()` is the identity.
    pub permutations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub residual: Option<f64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConsistencySection {
    pub passed: bool,
    pub group_order: usize,
    pub particle_count: usize,
    pub dimension_square_sum: u64,
    pub checks: Vec<CheckRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AbelianParticleRow {
    pub label: String,
    pub antiparticle: String,
    pub spin: String,
    pub self_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionRow {
    pub theta: f64,
    /// One value per requested pair, in the order of `AbelianSection::pairs`.
    /// `None` where the formula is singular.
    pub values: Vec<Option<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AbelianSection {
    pub modulus: u32,
    pub momentum: f64,
    pub particles: Vec<AbelianParticleRow>,
    pub notes: Vec<String>,
    /// Column names of the cross-section grid, e.g. `(1,0)x(0,1)`.
    pub pairs: Vec<String>,
    pub cross_sections: Vec<CrossSectionRow>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compute::{self, Pipeline};
    use crate::render;
    use anyonkit::group::parse_group_name;

    fn full_document() -> OutputDocument {
        let group = parse_group_name("S3").unwrap();
        let seed = compute::seed_or_default(None);
        let p = Pipeline::new(group.clone(), seed).unwrap();
        let mut doc = OutputDocument::new("S3");
        doc.sections = Sections {
            particles: Some(compute::particles(&p.double)),
            character_table: Some(compute::character_table(&group, seed).unwrap()),
            smatrix: Some(compute::smatrix(&p)),
            fusion: Some(compute::fusion(&p.fusion)),
            probabilities: Some(compute::probabilities(&p.fusion, None, None, false).unwrap()),
            analysis: Some(Analysis {
                subsystems: Some(compute::subsystems(&p.fusion)),
                symmetries: Some(compute::symmetries(&p.fusion, false).unwrap()),
                consistency: Some(compute::consistency(&group, seed)),
                abelian: Some(
                    compute::abelian(3, &[compute::parse_zn_pair("1,1:1,1", 3).unwrap()], 1.0, 4).unwrap(),
                ),
            }),
        };
        doc
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let doc = full_document();
        let text = render::render_json(&doc).unwrap();
        let back: OutputDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn text_contains_every_table_cell() {
        let doc = full_document();
        let text = render::render_text(&doc);
        for table in render::tables(&doc) {
            for row in &table.rows {
                let line = text
                    .lines()
                    .find(|l| row.iter().all(|c| l.contains(c.as_str())))
                    .map(str::to_string);
                assert!(line.is_some(), "{}: row {row:?} missing", table.title);
            }
        }
    }

    #[test]
    fn empty_sections_are_omitted() {
        let doc = OutputDocument::new("Z2");
        let text = render::render_json(&doc).unwrap();
        assert!(!text.contains("particles"));
        let back: OutputDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }
}
