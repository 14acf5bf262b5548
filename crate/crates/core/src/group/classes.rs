use std::cmp::Ordering;

use super::{FiniteGroup, Permutation};
use crate::error::{Error, Result};

/// One conjugacy class of a group.
///
/// Members are ordered by their disjoint-cycle form (cycles compared as
/// point sequences), so the representative `members[0]` reads like the
/// textbook choice: `(1,2)`, `(1,2,3)`, `(1,2)(3,4)`.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub index: usize,
    pub representative: Permutation,
    pub members: Vec<Permutation>,
    /// Indices of `members` in the parent group.
    pub member_indices: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Index of the representative in the parent group.
    pub fn representative_index(&self) -> usize {
        self.member_indices[0]
    }
}

/// Conjugacy classes of a group in canonical order, with a reverse lookup
/// from element index to (class, position within class).
#[derive(Clone, Debug)]
pub struct ClassStructure {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    position: Vec<usize>,
}

impl ClassStructure {
    pub fn new(group: &FiniteGroup) -> Self {
        let classes = conjugacy_classes(group);
        let mut class_of = vec![0; group.order()];
        let mut position = vec![0; group.order()];
        for class in &classes {
            for (pos, &m) in class.member_indices.iter().enumerate() {
                class_of[m] = class.index;
                position[m] = pos;
            }
        }
        Self {
            classes,
            class_of,
            position,
        }
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of the element with group index `element`.
    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Position of the element within its class member list.
    pub fn position_in_class(&self, element: usize) -> usize {
        self.position[element]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }
}

fn cycle_form_cmp(a: &Permutation, b: &Permutation) -> Ordering {
    a.cycles().cmp(&b.cycles())
}

/// Partitions `group` into conjugacy classes.
///
/// Classes are sorted by (representative order, class size, least member
/// image sequence); the identity class is always first.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<ConjugacyClass> {
    let n = group.order();
    let mut assigned = vec![false; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut orbit = Vec::new();
        for g in 0..n {
            let y = group.conjugate(g, x);
            if !assigned[y] {
                assigned[y] = true;
                orbit.push(y);
            }
        }
        raw.push(orbit);
    }

    let mut classes: Vec<(usize, usize, Permutation, Vec<usize>)> = raw
        .into_iter()
        .map(|mut members| {
            members.sort_by(|&a, &b| cycle_form_cmp(group.element(a), group.element(b)));
            let least = members
                .iter()
                .map(|&m| group.element(m))
                .min()
                .expect("nonempty class")
                .clone();
            (group.element_order(members[0]), members.len(), least, members)
        })
        .collect();
    classes.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));

    classes
        .into_iter()
        .enumerate()
        .map(|(index, (_, _, _, member_indices))| {
            let members: Vec<Permutation> =
                member_indices.iter().map(|&m| group.element(m).clone()).collect();
            ConjugacyClass {
                index,
                representative: members[0].clone(),
                members,
                member_indices,
            }
        })
        .collect()
}

/// The subgroup `{g : g h = h g}`.
pub fn centralizer(group: &FiniteGroup, h: &Permutation) -> Result<FiniteGroup> {
    let hi = group
        .index_of(h)
        .ok_or_else(|| Error::NotInGroup(h.to_string()))?;
    let elements: Vec<Permutation> = (0..group.order())
        .filter(|&g| group.commute(g, hi))
        .map(|g| group.element(g).clone())
        .collect();
    Ok(FiniteGroup::from_closed_elements(group.degree(), elements))
}

/// Least `m >= 1` with `h^m = 1`.
pub fn element_order(h: &Permutation) -> usize {
    h.order()
}

/// Conjugators carrying a class representative onto each class member.
///
/// `reps[i] * representative * reps[i]^-1 == members[i]` for every `i`.
#[derive(Clone, Debug)]
pub struct Transversal {
    pub class_index: usize,
    pub reps: Vec<Permutation>,
    /// Group indices of `reps`.
    pub rep_indices: Vec<usize>,
}

/// Coset representatives of the centralizer of class `class_index`,
/// indexed by the class member they conjugate the representative onto.
///
/// Elements are scanned in canonical order and the first conjugator found
/// for each member is kept.
pub fn right_transversal(
    group: &FiniteGroup,
    classes: &ClassStructure,
    class_index: usize,
) -> Result<Transversal> {
    if class_index >= classes.len() {
        return Err(Error::IndexOutOfRange {
            index: class_index,
            limit: classes.len(),
        });
    }
    let class = classes.class(class_index);
    let rep = class.representative_index();
    let mut found: Vec<Option<usize>> = vec![None; class.size()];
    let mut remaining = class.size();
    for g in 0..group.order() {
        let target = group.conjugate(g, rep);
        let pos = classes.position_in_class(target);
        if found[pos].is_none() {
            found[pos] = Some(g);
            remaining -= 1;
            if remaining == 0 {
                break;
            }
        }
    }
    let rep_indices: Vec<usize> = found
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Internal("class member without conjugator".into())))
        .collect::<Result<_>>()?;
    Ok(Transversal {
        class_index,
        reps: rep_indices.iter().map(|&i| group.element(i).clone()).collect(),
        rep_indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, GroupFamily};

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn s3_classes() {
        let g = named_group(GroupFamily::Symmetric, 3).unwrap();
        let classes = conjugacy_classes(&g);
        let sizes: Vec<usize> = classes.iter().map(ConjugacyClass::size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(classes[1].representative.to_string(), "(1,2)");
        assert_eq!(classes[2].representative.to_string(), "(1,2,3)");
    }

    #[test]
    fn a5_classes() {
        let g = named_group(GroupFamily::Alternating, 5).unwrap();
        let classes = conjugacy_classes(&g);
        let sizes: Vec<usize> = classes.iter().map(ConjugacyClass::size).collect();
        assert_eq!(sizes, vec![1, 15, 20, 12, 12]);
        let reps: Vec<String> = classes.iter().map(|c| c.representative.to_string()).collect();
        assert_eq!(reps, vec!["()", "(1,2)(3,4)", "(1,2,3)", "(1,2,3,4,5)", "(1,2,3,5,4)"]);
    }

    #[test]
    fn d4_classes() {
        let g = named_group(GroupFamily::Dihedral, 4).unwrap();
        let mut sizes = ClassStructure::new(&g).sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn trivial_group_has_one_class() {
        let g = named_group(GroupFamily::Cyclic, 1).unwrap();
        assert_eq!(conjugacy_classes(&g).len(), 1);
    }

    #[test]
    fn centralizers() {
        let s3 = named_group(GroupFamily::Symmetric, 3).unwrap();
        assert_eq!(centralizer(&s3, &p("(1,2)", 3)).unwrap().order(), 2);
        assert_eq!(centralizer(&s3, &Permutation::identity(3)).unwrap().order(), 6);

        let a5 = named_group(GroupFamily::Alternating, 5).unwrap();
        let klein = centralizer(&a5, &p("(1,2)(3,4)", 5)).unwrap();
        assert_eq!(klein.order(), 4);
        assert!(klein.is_abelian());
        assert!(klein.contains(&p("(1,3)(2,4)", 5)));

        assert!(matches!(
            centralizer(&s3, &p("(1,2)", 4)),
            Err(Error::NotInGroup(_))
        ));
    }

    fn check_transversal(g: &FiniteGroup, cs: &ClassStructure, a: usize) {
        let t = right_transversal(g, cs, a).unwrap();
        let class = cs.class(a);
        assert_eq!(t.reps.len(), class.size());
        for (x, member) in t.reps.iter().zip(&class.members) {
            assert_eq!(&x.conjugate(&class.representative), member);
        }
    }

    #[test]
    fn transversals_conjugate_onto_members() {
        for (fam, n) in [
            (GroupFamily::Symmetric, 3),
            (GroupFamily::Dihedral, 4),
            (GroupFamily::Alternating, 5),
            (GroupFamily::Symmetric, 4),
        ] {
            let g = named_group(fam, n).unwrap();
            let cs = ClassStructure::new(&g);
            for a in 0..cs.len() {
                check_transversal(&g, &cs, a);
            }
        }
    }

    #[test]
    fn identity_class_transversal_is_identity() {
        let g = named_group(GroupFamily::Symmetric, 3).unwrap();
        let cs = ClassStructure::new(&g);
        let t = right_transversal(&g, &cs, 0).unwrap();
        assert_eq!(t.reps.len(), 1);
        assert!(t.reps[0].is_identity());
    }

    #[test]
    fn d4_reflection_class_transversal() {
        let g = named_group(GroupFamily::Dihedral, 4).unwrap();
        let cs = ClassStructure::new(&g);
        let a = cs
            .classes()
            .iter()
            .position(|c| c.members.contains(&p("(2,4)", 4)))
            .unwrap();
        assert_eq!(right_transversal(&g, &cs, a).unwrap().reps.len(), 2);
        assert!(right_transversal(&g, &cs, 99).is_err());
    }

    #[test]
    fn class_times_centralizer_is_group_order() {
        let g = named_group(GroupFamily::Symmetric, 4).unwrap();
        let cs = ClassStructure::new(&g);
        assert_eq!(cs.sizes().iter().sum::<usize>(), 24);
        for c in cs.classes() {
            let n = centralizer(&g, &c.representative).unwrap();
            assert_eq!(c.size() * n.order(), 24);
        }
    }
}
