mod common;

use anyonkit::analysis::majorana_census;
use anyonkit::characters::character_table;
use anyonkit::group::{named_group, GroupFamily};
use common::{match_labels, Theory};
use num_complex::Complex;

#[test]
fn every_reference_table_matches_by_signature() {
    for (name, fam, n, rows) in [
        ("S3", GroupFamily::Symmetric, 3, common::S3),
        ("A5", GroupFamily::Alternating, 5, common::A5),
        ("A4", GroupFamily::Alternating, 4, common::A4),
        ("S4", GroupFamily::Symmetric, 4, common::S4),
        ("D4", GroupFamily::Dihedral, 4, common::D4),
    ] {
        let t = Theory::build(name, fam, n);
        let map = match_labels(&t.double, rows).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(map["A"], 0, "{name}: vacuum");
    }
}

#[test]
fn s3_fusion_examples() {
    let t = Theory::build("S3", GroupFamily::Symmetric, 3);
    let m = match_labels(&t.double, common::S3).unwrap();
    let get = |a: &str, b: &str, c: &str| t.table.get(m[a], m[b], m[c]);
    // B is the sign charge: it fixes the 2-dim objects and swaps D and E
    assert_eq!(get("B", "C", "C"), 1);
    assert_eq!(get("B", "D", "E"), 1);
    assert_eq!(get("C", "C", "B"), 1);
    assert_eq!(get("D", "D", "A"), 1);
    assert_eq!(get("F", "G", "C"), 1);
    assert_eq!(get("F", "G", "H"), 1);
}

#[test]
fn a4_character_table_uses_a_cube_root_of_unity() {
    let g = named_group(GroupFamily::Alternating, 4).unwrap();
    let t = character_table::<f64>(&g).unwrap();
    assert_eq!(t.degrees(), &[1, 1, 1, 3]);
    // the two non-trivial linear characters take values zeta and -1-zeta
    for i in 1..3 {
        for c in 0..t.len() {
            let z = t.value(i, c);
            assert!((z * z * z - Complex::new(1.0, 0.0)).norm() < 1e-9);
        }
    }
}

#[test]
fn majorana_remarks() {
    for (fam, n) in [
        (GroupFamily::Symmetric, 3),
        (GroupFamily::Alternating, 5),
        (GroupFamily::Symmetric, 4),
        (GroupFamily::Dihedral, 4),
    ] {
        let t = Theory::build("", fam, n);
        assert!(majorana_census(&t.table).unwrap().all_majorana);
    }
    let t = Theory::build("A4", GroupFamily::Alternating, 4);
    let m = match_labels(&t.double, common::A4).unwrap();
    let census = majorana_census(&t.table).unwrap();
    assert!(!census.all_majorana);
    let (b, c) = (t.table.label(m["B"]).to_string(), t.table.label(m["C"]).to_string());
    assert!(census.dual_pairs.contains(&(b.clone().min(c.clone()), b.max(c))));
}
