//! The cut family and its three validation conditions.
//!
//! A family of cuts is admissible when (1) every cut separates the space,
//! (2) no cut separates another cut, and (3) no pairwise intersection of
//! distinct cuts separates the space. Validation reports the first failure
//! per condition with a witness that re-verifies against the separation
//! predicates of [`crate::space`].

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::space::{Space, VertexSet};

/// Outcome of one validation condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "lowercase")]
pub enum ConditionStatus<W> {
    Pass,
    Fail(W),
}

impl<W> ConditionStatus<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, ConditionStatus::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            ConditionStatus::Pass => None,
            ConditionStatus::Fail(w) => Some(w),
        }
    }
}

/// Condition (1) failure: a cut whose removal leaves the space connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonSeparatingCut {
    pub cut: VertexSet,
}

/// Condition (2) failure: `separator` splits `separated`, witnessed by two
/// of its vertices landing in distinct components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatedCutPair {
    pub separator: VertexSet,
    pub separated: VertexSet,
    pub vertices: (String, String),
}

/// Condition (3) failure: the intersection of two distinct cuts separates
/// the space, witnessed by two vertices in distinct components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatingIntersection {
    pub first: VertexSet,
    pub second: VertexSet,
    pub intersection: VertexSet,
    pub vertices: (String, String),
}

/// Full validation report for a candidate cut family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub condition1: ConditionStatus<NonSeparatingCut>,
    pub condition2: ConditionStatus<SeparatedCutPair>,
    pub condition3: ConditionStatus<SeparatingIntersection>,
    /// An empty family is vacuously valid; this marks that case.
    pub empty_family: bool,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.condition1.is_pass() && self.condition2.is_pass() && self.condition3.is_pass()
    }

    /// Indices (1, 2, 3) of the failing conditions.
    pub fn failing_conditions(&self) -> Vec<u8> {
        let mut out = Vec::new();
        if !self.condition1.is_pass() {
            out.push(1);
        }
        if !self.condition2.is_pass() {
            out.push(2);
        }
        if !self.condition3.is_pass() {
            out.push(3);
        }
        out
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.condition1 {
            ConditionStatus::Pass => writeln!(f, "condition 1 (every cut separates): pass")?,
            ConditionStatus::Fail(w) => writeln!(
                f,
                "condition 1 (every cut separates): FAIL — cut {} does not separate",
                w.cut
            )?,
        }
        match &self.condition2 {
            ConditionStatus::Pass => writeln!(f, "condition 2 (no cut separates a cut): pass")?,
            ConditionStatus::Fail(w) => writeln!(
                f,
                "condition 2 (no cut separates a cut): FAIL — {} separates {} (vertices {} and {})",
                w.separator, w.separated, w.vertices.0, w.vertices.1
            )?,
        }
        match &self.condition3 {
            ConditionStatus::Pass => write!(f, "condition 3 (no pairwise intersection separates): pass")?,
            ConditionStatus::Fail(w) => write!(
                f,
                "condition 3 (no pairwise intersection separates): FAIL — {} ∩ {} = {} separates (vertices {} and {})",
                w.first, w.second, w.intersection, w.vertices.0, w.vertices.1
            )?,
        }
        if self.empty_family {
            write!(f, "\nwarning: empty cut family (vacuously valid)")?;
        }
        Ok(())
    }
}

fn check_cut_inputs(space: &Space, cuts: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let mut sorted = cuts.to_vec();
    sorted.sort();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::Input(format!("duplicate cut {}", pair[0])));
        }
    }
    for cut in &sorted {
        for v in cut.iter() {
            if !space.contains_vertex(v) {
                return Err(Error::Input(format!("unknown vertex '{v}' in cut {cut}")));
            }
        }
        if cut.is_empty() {
            return Err(Error::input("empty cut cannot separate the space"));
        }
        if cut.len() == space.vertex_count() {
            return Err(Error::Input(format!("cut {cut} is the whole vertex set")));
        }
    }
    Ok(sorted)
}

/// First two vertices of `within` (all vertices when `within` is `None`)
/// that land in distinct components under `map`, in canonical order.
fn split_witness(
    map: &BTreeMap<String, usize>,
    within: Option<&VertexSet>,
) -> Option<(String, String)> {
    let mut first: Option<(&String, usize)> = None;
    let candidates: Vec<&String> = match within {
        Some(set) => set
            .iter()
            .filter_map(|v| map.get_key_value(v).map(|(k, _)| k))
            .collect(),
        None => map.keys().collect(),
    };
    for v in candidates {
        let c = map[v];
        match first {
            None => first = Some((v, c)),
            Some((x, cx)) if cx != c => return Some((x.clone(), v.clone())),
            Some(_) => {}
        }
    }
    None
}

/// Validates a candidate family against conditions (1)–(3).
///
/// The family is scanned in canonical (sorted) order, so the reported
/// witnesses are deterministic regardless of input order. Duplicate cuts,
/// unknown vertices, empty cuts and whole-space cuts are input errors, not
/// condition failures.
pub fn validate(space: &Space, cuts: &[VertexSet]) -> Result<AxiomReport> {
    let sorted = check_cut_inputs(space, cuts)?;

    let mut condition1 = ConditionStatus::Pass;
    for cut in &sorted {
        if !space.separates(cut)? {
            condition1 = ConditionStatus::Fail(NonSeparatingCut { cut: cut.clone() });
            break;
        }
    }

    let mut condition2 = ConditionStatus::Pass;
    'outer2: for a in &sorted {
        let map = space.component_map(a)?;
        for b in &sorted {
            if let Some(vertices) = split_witness(&map, Some(b)) {
                condition2 = ConditionStatus::Fail(SeparatedCutPair {
                    separator: a.clone(),
                    separated: b.clone(),
                    vertices,
                });
                break 'outer2;
            }
        }
    }

    let mut condition3 = ConditionStatus::Pass;
    'outer3: for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            let meet = a.intersection(b);
            let map = space.component_map(&meet)?;
            if let Some(vertices) = split_witness(&map, None) {
                condition3 = ConditionStatus::Fail(SeparatingIntersection {
                    first: a.clone(),
                    second: b.clone(),
                    intersection: meet,
                    vertices,
                });
                break 'outer3;
            }
        }
    }

    Ok(AxiomReport {
        condition1,
        condition2,
        condition3,
        empty_family: sorted.is_empty(),
    })
}

/// A space together with a validated (or explicitly unvalidated) cut family.
#[derive(Debug, Clone)]
pub struct CutSystem {
    space: Space,
    cuts: Vec<VertexSet>,
}

impl CutSystem {
    /// Validates and constructs; a failing report becomes [`Error::Axioms`].
    pub fn new(space: Space, cuts: Vec<VertexSet>) -> Result<Self> {
        let report = validate(&space, &cuts)?;
        if !report.all_pass() {
            return Err(Error::Axioms(Box::new(report)));
        }
        let cuts = check_cut_inputs(&space, &cuts)?;
        Ok(CutSystem { space, cuts })
    }

    /// Constructs with only the basic input checks, skipping conditions
    /// (1)–(3). Downstream structures built from such a system may violate
    /// their own guarantees; this exists so that those violations can be
    /// observed and reported instead of prevented.
    pub fn new_unvalidated(space: Space, cuts: Vec<VertexSet>) -> Result<Self> {
        let cuts = check_cut_inputs(&space, &cuts)?;
        Ok(CutSystem { space, cuts })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// The cut family in canonical order.
    pub fn cuts(&self) -> &[VertexSet] {
        &self.cuts
    }
}

/// Singleton cuts at the articulation vertices of the space, via one DFS
/// (low-link). The result always satisfies conditions (1)–(3): singletons
/// cannot be separated, and empty pairwise intersections never separate a
/// connected space.
pub fn articulation_cuts(space: &Space) -> Vec<VertexSet> {
    let vertices: Vec<&str> = space.vertices().collect();
    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let n = vertices.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;

    // Iterative DFS; each frame tracks the neighbor iterator position.
    let mut parent = vec![usize::MAX; n];
    let mut root_children = 0usize;
    let root = 0usize;
    let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    let neighbors_of =
        |u: usize| -> Vec<usize> { space.neighbors(vertices[u]).map(|w| index[w]).collect() };
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    stack.push((root, neighbors_of(root), 0));
    while let Some((u, neigh, pos)) = stack.last_mut() {
        let u = *u;
        if *pos < neigh.len() {
            let w = neigh[*pos];
            *pos += 1;
            if disc[w] == usize::MAX {
                parent[w] = u;
                if u == root {
                    root_children += 1;
                }
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, neighbors_of(w), 0));
            } else if w != parent[u] {
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some((p, _, _)) = stack.last() {
                let p = *p;
                low[p] = low[p].min(low[u]);
                if p != root && low[u] >= disc[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    is_cut[root] = root_children >= 2;

    vertices
        .iter()
        .enumerate()
        .filter(|(i, _)| is_cut[*i])
        .map(|(_, v)| VertexSet::new([*v]))
        .collect()
}

/// Greedy extraction of an admissible subfamily: candidates are scanned in
/// input order and kept exactly when conditions (1)–(3) still hold for the
/// kept set. The result always validates.
pub fn filter_admissible(space: &Space, candidates: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let mut kept: Vec<VertexSet> = Vec::new();
    for cand in candidates {
        for v in cand.iter() {
            if !space.contains_vertex(v) {
                return Err(Error::Input(format!(
                    "unknown vertex '{v}' in candidate {cand}"
                )));
            }
        }
        if cand.is_empty() || cand.len() == space.vertex_count() || !space.separates(cand)? {
            continue; // condition (1)
        }
        if kept.contains(cand) {
            continue; // duplicate set
        }
        let mut ok = true;
        for b in &kept {
            if space.separates_set(cand, b)?
                || space.separates_set(b, cand)?
                || space.separates(&cand.intersection(b))?
            {
                ok = false;
                break;
            }
        }
        if ok {
            kept.push(cand.clone());
        }
    }
    Ok(kept)
}
