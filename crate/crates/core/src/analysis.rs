//! Structural analyses of fusion tables: closed subsystems, self-dual
//! particles, label symmetries and whole-pipeline consistency reports.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::braiding::Braiding;
use crate::double::{antiparticle, FusionTable, QuantumDouble, Spin};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalar::Scalar;

/// Largest table enumerated subset by subset.
pub const EXHAUSTIVE_LIMIT: usize = 16;
/// Largest table accepted by the symmetry search.
pub const SYMMETRY_PARTICLE_CAP: usize = 24;
/// Backtracking nodes visited before the symmetry search gives up.
pub const SYMMETRY_NODE_CAP: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsystemMethod {
    Exhaustive,
    GeneratedClosure,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubsystemReport {
    pub method: SubsystemMethod,
    /// Particle indices of each closed set, ascending; sets sorted by size
    /// then lexicographically.
    pub closed_sets: Vec<Vec<usize>>,
    pub labels: Vec<Vec<String>>,
}

/// Smallest fusion-closed set containing the vacuum and `generators`.
pub fn closure(table: &FusionTable, generators: &[usize]) -> Vec<usize> {
    let n = table.len();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0];
    for &g in generators {
        if !inside[g] {
            inside[g] = true;
            members.push(g);
        }
    }
    let mut done = 0;
    // every pair (a, b) with b among the first `done` members has been fused
    while done < members.len() {
        let b = members[done];
        let mut k = 0;
        while k <= done {
            let a = members[k];
            for (c, _) in table.channels(a, b) {
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
            k += 1;
        }
        done += 1;
    }
    members.sort_unstable();
    members
}

/// Whether `set` contains the vacuum, is closed under fusion and under
/// antiparticles.
pub fn is_closed(table: &FusionTable, set: &[usize]) -> bool {
    let mut inside = vec![false; table.len()];
    for &s in set {
        inside[s] = true;
    }
    if !inside[0] {
        return false;
    }
    set.iter().all(|&a| {
        table.dual(a).is_some_and(|d| inside[d])
            && set
                .iter()
                .all(|&b| table.channels(a, b).iter().all(|&(c, _)| inside[c]))
    })
}

/// All fusion-closed particle sets containing the vacuum.
///
/// Tables of at most [`EXHAUSTIVE_LIMIT`] particles are enumerated
/// exhaustively. Larger tables report the closures of every generating set
/// of size at most two, which need not be all closed sets.
pub fn closed_subsystems(table: &FusionTable) -> SubsystemReport {
    let n = table.len();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let method = if n <= EXHAUSTIVE_LIMIT {
        for mask in 0u32..(1u32 << (n - 1)) {
            let set: Vec<usize> = std::iter::once(0)
                .chain((1..n).filter(|&i| mask & (1 << (i - 1)) != 0))
                .collect();
            if is_closed(table, &set) {
                found.insert(set);
            }
        }
        SubsystemMethod::Exhaustive
    } else {
        found.insert(closure(table, &[]));
        for a in 1..n {
            found.insert(closure(table, &[a]));
            for b in a + 1..n {
                found.insert(closure(table, &[a, b]));
            }
        }
        SubsystemMethod::GeneratedClosure
    };
    let mut closed_sets: Vec<Vec<usize>> = found.into_iter().collect();
    closed_sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let labels = closed_sets
        .iter()
        .map(|s| s.iter().map(|&i| table.label(i).to_string()).collect())
        .collect();
    SubsystemReport {
        method,
        closed_sets,
        labels,
    }
}

/// Fusion table restricted to a closed set, relabelled in set order.
pub fn restrict(table: &FusionTable, set: &[usize]) -> Result<FusionTable> {
    if !is_closed(table, set) {
        return Err(Error::InvalidParameter("set is not closed under fusion".into()));
    }
    let k = set.len();
    let mut coefficients = Vec::with_capacity(k * k * k);
    for &a in set {
        for &b in set {
            for &c in set {
                coefficients.push(table.get(a, b, c));
            }
        }
    }
    FusionTable::from_parts(
        coefficients,
        set.iter().map(|&i| table.label(i).to_string()).collect(),
        set.iter().map(|&i| table.dimensions()[i]).collect(),
        set.iter().map(|&i| table.spins()[i]).collect(),
    )
}

/// Multiplicity of the vacuum in `p^{x n}` for `n = 0..=max_n`.
pub fn vacuum_multiplicities(table: &FusionTable, p: usize, max_n: usize) -> Vec<u128> {
    let n = table.len();
    let mut state = vec![0u128; n];
    state[0] = 1;
    let mut out = vec![1];
    for _ in 0..max_n {
        let mut next = vec![0u128; n];
        for (a, &m) in state.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (c, k) in table.channels(a, p) {
                next[c] += m * k as u128;
            }
        }
        state = next;
        out.push(state[0]);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MajoranaCensus {
    pub self_dual: Vec<String>,
    pub dual_pairs: Vec<(String, String)>,
    pub all_majorana: bool,
}

/// Splits the particles into self-dual ones and antiparticle pairs.
pub fn majorana_census(table: &FusionTable) -> Result<MajoranaCensus> {
    let mut self_dual = Vec::new();
    let mut dual_pairs = Vec::new();
    for a in 0..table.len() {
        let d = table
            .dual(a)
            .ok_or_else(|| Error::Internal(format!("{} has no unique antiparticle", table.label(a))))?;
        if d == a {
            self_dual.push(table.label(a).to_string());
        } else if a < d {
            dual_pairs.push((table.label(a).to_string(), table.label(d).to_string()));
        }
    }
    Ok(MajoranaCensus {
        all_majorana: dual_pairs.is_empty(),
        self_dual,
        dual_pairs,
    })
}

/// Which particle data a label symmetry must preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryProfile {
    DimensionAndSpin,
    DimensionOnly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub profile: SymmetryProfile,
    /// Each entry maps particle `i` to `perm[i]`.
    pub permutations: Vec<Vec<usize>>,
    pub nodes_visited: u64,
}

impl SymmetryReport {
    pub fn len(&self) -> usize {
        self.permutations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutations.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    dimension: u64,
    spin: Option<Spin>,
    /// Sorted `(N^c_aa, d_c)` over channels of `a x a`; invariant under any
    /// dimension-preserving symmetry.
    square: Vec<(u32, u64)>,
}

/// Every permutation of labels that fixes the vacuum, preserves the chosen
/// profile, and leaves all fusion coefficients unchanged.
pub fn fusion_symmetries(table: &FusionTable, profile: SymmetryProfile) -> Result<SymmetryReport> {
    fusion_symmetries_with_cap(table, profile, SYMMETRY_NODE_CAP)
}

pub fn fusion_symmetries_with_cap(
    table: &FusionTable,
    profile: SymmetryProfile,
    node_cap: u64,
) -> Result<SymmetryReport> {
    let n = table.len();
    if n > SYMMETRY_PARTICLE_CAP {
        return Err(Error::SearchCap(format!(
            "{n} particles exceeds the symmetry-search limit of {SYMMETRY_PARTICLE_CAP}"
        )));
    }
    let signatures: Vec<Signature> = (0..n)
        .map(|a| {
            let mut square: Vec<(u32, u64)> = table
                .channels(a, a)
                .into_iter()
                .map(|(c, m)| (m, table.dimensions()[c]))
                .collect();
            square.sort_unstable();
            Signature {
                dimension: table.dimensions()[a],
                spin: (profile == SymmetryProfile::DimensionAndSpin).then(|| table.spins()[a]),
                square,
            }
        })
        .collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| signatures[a] == signatures[b]).collect())
        .collect();

    let mut search = Search {
        table,
        candidates: &candidates,
        perm: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
        nodes: 0,
        cap: node_cap,
    };
    if n > 0 {
        search.perm[0] = 0;
        search.used[0] = true;
        search.extend(1)?;
    }
    Ok(SymmetryReport {
        profile,
        permutations: search.found,
        nodes_visited: search.nodes,
    })
}

struct Search<'a> {
    table: &'a FusionTable,
    candidates: &'a [Vec<usize>],
    perm: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
    nodes: u64,
    cap: u64,
}

impl Search<'_> {
    fn extend(&mut self, k: usize) -> Result<()> {
        let n = self.perm.len();
        if k == n {
            self.found.push(self.perm.clone());
            return Ok(());
        }
        for idx in 0..self.candidates[k].len() {
            let target = self.candidates[k][idx];
            if self.used[target] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::SearchCap(format!("symmetry search exceeded {} nodes", self.cap)));
            }
            self.perm[k] = target;
            if self.consistent(k) {
                self.used[target] = true;
                self.extend(k + 1)?;
                self.used[target] = false;
            }
        }
        self.perm[k] = usize::MAX;
        Ok(())
    }

    /// Checks every coefficient whose three indices are assigned and at
    /// least one of which is `k`.
    fn consistent(&self, k: usize) -> bool {
        let t = self.table;
        let p = &self.perm;
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    if a != k && b != k && c != k {
                        continue;
                    }
                    if t.get(a, b, c) != t.get(p[a], p[b], p[c]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// One named check in a consistency report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub detail: String,
}

impl CheckResult {
    fn residual(name: &str, residual: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            passed: residual < tol,
            residual: Some(residual),
            detail: format!("tolerance {tol:e}"),
        }
    }

    fn flag(name: &str, passed: bool, detail: String) -> Self {
        Self {
            name: name.into(),
            passed,
            residual: None,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub group_order: usize,
    pub particle_count: usize,
    pub dimension_square_sum: u64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

/// Options for [`consistency_report_with`].
#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub seed: u64,
    /// Largest group order for which the braid-matrix oracle is run.
    pub braid_oracle_max_order: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            seed: crate::characters::DEFAULT_SEED,
            braid_oracle_max_order: 12,
        }
    }
}

pub fn consistency_report(group: &FiniteGroup) -> ConsistencyReport {
    consistency_report_with::<f64>(group, ReportOptions::default())
}

/// Runs every invariant of the pipeline on `group`. Failures, including
/// computation errors, are recorded as failed checks rather than returned.
pub fn consistency_report_with<T: Scalar>(group: &FiniteGroup, options: ReportOptions) -> ConsistencyReport {
    let mut checks = Vec::new();
    let order = group.order();
    let fail = |name: &str, e: Error| CheckResult::flag(name, false, e.to_string());

    let double = match QuantumDouble::<T>::with_seed(group.clone(), options.seed) {
        Ok(d) => d,
        Err(e) => {
            return ConsistencyReport {
                group_order: order,
                particle_count: 0,
                dimension_square_sum: 0,
                checks: vec![fail("particle spectrum", e)],
                passed: false,
            }
        }
    };
    let dim_sum = double.dimension_square_sum();
    checks.push(CheckResult::flag(
        "dimension sum",
        dim_sum == (order as u64).pow(2),
        format!("sum d^2 = {dim_sum}, |H|^2 = {}", order * order),
    ));

    let md = match double.modular_data() {
        Ok(md) => md,
        Err(e) => {
            checks.push(fail("modular data", e));
            return finish(order, &double, checks);
        }
    };
    checks.push(CheckResult::residual("S symmetric", md.symmetry_residual(), T::MATRIX_TOL));
    checks.push(CheckResult::residual("S unitary", md.unitarity_residual(), T::MATRIX_TOL));
    checks.push(CheckResult::residual("S^2 permutation", md.conjugation_residual(), T::MATRIX_TOL));
    checks.push(CheckResult::flag(
        "C^2 = 1",
        md.conjugation_is_involution(),
        "charge conjugation is an involution".into(),
    ));
    checks.push(CheckResult::residual("(ST)^3 = S^2", md.modular_relation_residual(), T::PRODUCT_TOL));
    checks.push(CheckResult::residual("vacuum row", md.vacuum_row_residual(), T::MATRIX_TOL));

    let table = match FusionTable::from_modular_data(&md, double.particles()) {
        Ok(t) => t,
        Err(e) => {
            checks.push(fail("Verlinde integrality and fusion axioms", e));
            return finish(order, &double, checks);
        }
    };
    checks.push(CheckResult::flag(
        "Verlinde integrality",
        true,
        format!("{} coefficients", table.len().pow(3)),
    ));
    checks.push(CheckResult::flag("associativity", table.is_associative(), String::new()));
    let violations = table.invariant_violations();
    checks.push(CheckResult::flag(
        "fusion ring axioms",
        violations.is_empty(),
        violations.join("; "),
    ));
    let one = num_rational::Ratio::from_integer(1u64);
    let normalized = (0..table.len()).all(|a| {
        (0..table.len()).all(|b| (0..table.len()).map(|c| table.probability(a, b, c)).sum::<num_rational::Ratio<u64>>() == one)
    });
    checks.push(CheckResult::flag("probability normalization", normalized, String::new()));
    let anti: Result<Vec<usize>> = (0..table.len()).map(|p| antiparticle(&md, &table, p)).collect();
    checks.push(match anti {
        Ok(_) => CheckResult::flag("antiparticles agree", true, "S^2 matches fusion duals".into()),
        Err(e) => fail("antiparticles agree", e),
    });

    if order <= options.braid_oracle_max_order {
        match Braiding::with_seed(&double, options.seed).and_then(|b| {
            let s = b.s_oracle_residual()?;
            let mut stats = 0.0f64;
            for p in 0..double.len() {
                for q in 0..double.len() {
                    stats = stats.max(b.spin_statistics_residual(&table, p, q)?);
                }
            }
            Ok((s, stats))
        }) {
            Ok((s, stats)) => {
                checks.push(CheckResult::residual("braid oracle S", s, T::PRODUCT_TOL));
                checks.push(CheckResult::residual("spin-statistics trace", stats, T::PRODUCT_TOL));
            }
            Err(e) => checks.push(fail("braid oracle", e)),
        }
    } else {
        checks.push(CheckResult::flag(
            "braid oracle",
            true,
            format!("skipped: |H| = {order} above {}", options.braid_oracle_max_order),
        ));
    }
    finish(order, &double, checks)
}

fn finish<T: Scalar>(order: usize, double: &QuantumDouble<T>, checks: Vec<CheckResult>) -> ConsistencyReport {
    ConsistencyReport {
        group_order: order,
        particle_count: double.len(),
        dimension_square_sum: double.dimension_square_sum(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
