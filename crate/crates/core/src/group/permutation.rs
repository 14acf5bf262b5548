use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection of the points `{1, .., n}`.
///
/// Images are stored zero-based: `images[i]` is the image of point `i + 1`,
/// minus one. The derived ordering is lexicographic on that image sequence,
/// which is the canonical element order of [`FiniteGroup`](super::FiniteGroup).
///
/// Products compose right to left: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from one-based images, e.g. `[2, 1, 3]` for (1,2).
    pub fn from_images(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &p in one_based {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::Parse {
                    text: format!("{one_based:?}"),
                    reason: "image list is not a bijection".into(),
                });
            }
            seen[p - 1] = true;
            images.push((p - 1) as u32);
        }
        Ok(Self { images })
    }

    /// Builds a permutation from disjoint cycles of one-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::Parse {
                        text: format!("{cycles:?}"),
                        reason: format!("point {p} outside 1..{degree}"),
                    });
                }
                if used[p - 1] {
                    return Err(Error::Parse {
                        text: format!("{cycles:?}"),
                        reason: format!("point {p} repeated"),
                    });
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Self { images })
    }

    /// Parses disjoint-cycle notation such as `"(1,2)(3,4)"` or `"()"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if degree == 0 {
            return Err(err("degree must be positive"));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| err("expected a parenthesized cycle"))?;
            let body = &rest[1..body_end + 1];
            rest = &rest[body_end + 2..];
            if body.is_empty() {
                continue;
            }
            let points = body
                .split(',')
                .map(|tok| tok.parse::<usize>().map_err(|_| err(&format!("bad point {tok:?}"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(points);
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `p`, one-based.
    pub fn image(&self, p: usize) -> usize {
        self.images[p - 1] as usize + 1
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Self { images }
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Self) -> Self {
        &(self * other) * &self.inverse()
    }

    /// Least `m >= 1` with `self^m` the identity.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, lcm)
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that
    /// point. Points are one-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Permutation {
            images: rhs.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// Parses a semicolon-separated generator list such as `"(1,2)(3,4);(1,2,3)"`.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Permutation::parse(s, degree))
        .collect()
}
