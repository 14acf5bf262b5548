use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::Permutation;
use crate::error::{Error, Result};

/// Default cap on enumerated group order.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// A finite permutation group, fully enumerated.
///
/// Elements are sorted lexicographically by image sequence, so the identity
/// always has index 0. Multiplication and inversion are cached as index
/// tables.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl FiniteGroup {
    /// Closure of `generators` under composition, capped at
    /// [`DEFAULT_ORDER_CAP`] elements.
    pub fn generate(generators: &[Permutation]) -> Result<Self> {
        Self::generate_with_cap(generators, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(generators: &[Permutation], cap: usize) -> Result<Self> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let elements = closure(degree, generators, cap)?;
        Ok(Self::from_closed(degree, generators.to_vec(), elements))
    }

    /// Wraps an element set already known to be closed (e.g. a centralizer).
    pub(crate) fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let generators = greedy_generators(degree, &elements);
        Self::from_closed(degree, generators, elements)
    }

    fn from_closed(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(index[&(a * b)] as u32);
            }
        }
        let inv = elements.iter().map(|a| index[&a.inverse()] as u32).collect();
        Self {
            degree,
            generators,
            elements,
            index,
            mul,
            inv,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Index of the identity element.
    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Index of `g h g^-1`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a * b == b * a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.elements[a].order()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, i| {
            let o = self.element_order(i);
            acc / gcd(acc, o) * o
        })
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g * &x;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut sorted = elements.to_vec();
    sorted.sort();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for p in sorted {
        if span.contains(&p) {
            continue;
        }
        gens.push(p);
        span = closure(degree, &gens, usize::MAX)
            .expect("uncapped closure")
            .into_iter()
            .collect();
        if span.len() == elements.len() {
            break;
        }
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    gens
}

/// Families available through [`named_group`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupFamily {
    /// Symmetric group on n points.
    Symmetric,
    /// Alternating group on n points.
    Alternating,
    /// Dihedral group of order 2n acting on n points.
    Dihedral,
    /// Cyclic group of order n.
    Cyclic,
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Self::Symmetric),
            "A" | "a" => Ok(Self::Alternating),
            "D" | "d" => Ok(Self::Dihedral),
            "Z" | "z" | "C" | "c" => Ok(Self::Cyclic),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// Parses names such as `S3`, `A5`, `D4`, `Z6`.
pub fn parse_group_name(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| Error::UnsupportedFamily(name.to_string()))?;
    let family: GroupFamily = name[..split].parse()?;
    let n: usize = name[split..]
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad group size in {name:?}")))?;
    named_group(family, n)
}

/// Standard permutation models of small group families.
///
/// The dihedral group uses the rotation `(1,2,..,n)` and the reflection
/// fixing point 1; for n = 4 this gives the embedding with `(1,3)(2,4)`
/// central and `(2,4)` a reflection.
pub fn named_group(family: GroupFamily, n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let cycle = |pts: Vec<usize>, degree: usize| {
        Permutation::from_cycles(degree, &[pts]).expect("well-formed cycle")
    };
    let gens = match family {
        GroupFamily::Symmetric => {
            if n < 2 {
                vec![Permutation::identity(n)]
            } else {
                vec![cycle(vec![1, 2], n), cycle((1..=n).collect(), n)]
            }
        }
        GroupFamily::Alternating => {
            if n < 3 {
                vec![Permutation::identity(n)]
            } else {
                (3..=n).map(|k| cycle(vec![1, 2, k], n)).collect()
            }
        }
        GroupFamily::Dihedral => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "dihedral group D{n} has no faithful action on {n} points"
                )));
            }
            let reflection: Vec<usize> = (0..n).map(|i| (2 * n - i) % n + 1).collect();
            vec![
                cycle((1..=n).collect(), n),
                Permutation::from_images(&reflection).expect("reflection is a bijection"),
            ]
        }
        GroupFamily::Cyclic => {
            if n < 2 {
                vec![Permutation::identity(n)]
            } else {
                vec![cycle((1..=n).collect(), n)]
            }
        }
    };
    FiniteGroup::generate(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn s3_from_generators() {
        let g = FiniteGroup::generate(&[p("(1,2)", 3), p("(1,2,3)", 3)]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::generate(&[Permutation::identity(3)]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn a5_from_generators() {
        let g = FiniteGroup::generate(&[p("(1,2,3,4,5)", 5), p("(1,2,3)", 5)]).unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn order_cap() {
        let gens = [p("(1,2)", 6), p("(1,2,3,4,5,6)", 6)];
        assert_eq!(
            FiniteGroup::generate_with_cap(&gens, 100).unwrap_err(),
            Error::OrderCapExceeded { cap: 100 }
        );
        assert_eq!(FiniteGroup::generate(&gens).unwrap().order(), 720);
    }

    #[test]
    fn generator_errors() {
        assert_eq!(FiniteGroup::generate(&[]).unwrap_err(), Error::NoGenerators);
        assert!(matches!(
            FiniteGroup::generate(&[p("(1,2)", 2), p("(1,2)", 3)]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn named_orders() {
        assert_eq!(named_group(GroupFamily::Symmetric, 3).unwrap().order(), 6);
        assert_eq!(named_group(GroupFamily::Symmetric, 4).unwrap().order(), 24);
        assert_eq!(named_group(GroupFamily::Alternating, 4).unwrap().order(), 12);
        assert_eq!(named_group(GroupFamily::Alternating, 5).unwrap().order(), 60);
        assert_eq!(named_group(GroupFamily::Dihedral, 4).unwrap().order(), 8);
        let z4 = named_group(GroupFamily::Cyclic, 4).unwrap();
        assert_eq!(z4.order(), 4);
        assert!(z4.is_abelian());
        assert_eq!(named_group(GroupFamily::Cyclic, 1).unwrap().order(), 1);
    }

    #[test]
    fn d4_matches_expected_embedding() {
        let d4 = named_group(GroupFamily::Dihedral, 4).unwrap();
        for s in ["(1,3)(2,4)", "(2,4)", "(1,3)", "(1,2,3,4)", "(1,4)(2,3)", "(1,2)(3,4)"] {
            assert!(d4.contains(&p(s, 4)), "{s} missing");
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_group_name("A5").unwrap().order(), 60);
        assert_eq!(parse_group_name("Z6").unwrap().order(), 6);
        assert!(matches!(parse_group_name("Q8"), Err(Error::UnsupportedFamily(_))));
        assert!(parse_group_name("D2").is_err());
    }

    #[test]
    fn canonical_order_is_deterministic() {
        let a = FiniteGroup::generate(&[p("(1,2)", 4), p("(1,2,3,4)", 4)]).unwrap();
        let b = FiniteGroup::generate(&[p("(1,2,3,4)", 4), p("(1,2)", 4)]).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn tables_agree_with_permutation_arithmetic() {
        let g = named_group(GroupFamily::Symmetric, 4).unwrap();
        for a in 0..g.order() {
            assert!(g.element(g.mul(a, g.inv(a))).is_identity());
            for b in (0..g.order()).step_by(5) {
                assert_eq!(g.element(g.mul(a, b)), &(g.element(a) * g.element(b)));
            }
        }
    }
}
