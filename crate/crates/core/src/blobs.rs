//! Inseparability and maximal inseparable sets.
//!
//! A set is inseparable when no cut of the family splits two of its
//! members. Inseparability of a set is equivalent to pairwise
//! inseparability of its members, so the maximal inseparable sets are
//! exactly the maximal cliques of the pairwise relation; they are
//! enumerated with pivoted Bron–Kerbosch. Together with the cuts they form
//! the element set of the pretree: one element per cut, one per maximal
//! inseparable set that is not itself a single cut.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cuts::CutSystem;
use crate::error::{Error, Result};
use crate::space::VertexSet;

/// Default cap on the number of maximal inseparable sets enumerated before
/// giving up with [`Error::ResourceLimit`].
pub const DEFAULT_BLOB_LIMIT: usize = 10_000;

/// The symmetric reflexive relation "no cut separates x from y", tabulated
/// over all vertices of the space.
#[derive(Debug, Clone)]
pub struct InseparabilityRelation {
    vertices: Vec<String>,
    related: Vec<Vec<bool>>,
}

impl InseparabilityRelation {
    pub fn new(cs: &CutSystem) -> Result<Self> {
        let vertices: Vec<String> = cs.space().vertices().map(str::to_owned).collect();
        let n = vertices.len();
        let mut related = vec![vec![true; n]; n];
        for cut in cs.cuts() {
            let map = cs.space().component_map(cut)?;
            let comp: Vec<Option<usize>> = vertices.iter().map(|v| map.get(v).copied()).collect();
            for i in 0..n {
                let Some(ci) = comp[i] else { continue };
                for j in i + 1..n {
                    let Some(cj) = comp[j] else { continue };
                    if ci != cj {
                        related[i][j] = false;
                        related[j][i] = false;
                    }
                }
            }
        }
        Ok(InseparabilityRelation { vertices, related })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn related(&self, x: &str, y: &str) -> Result<bool> {
        let i = self.index_of(x)?;
        let j = self.index_of(y)?;
        Ok(self.related[i][j])
    }

    fn index_of(&self, v: &str) -> Result<usize> {
        self.vertices
            .binary_search_by(|probe| probe.as_str().cmp(v))
            .map_err(|_| Error::Input(format!("unknown vertex '{v}'")))
    }

    fn neighbors(&self, i: usize) -> BTreeSet<usize> {
        (0..self.vertices.len())
            .filter(|&j| j != i && self.related[i][j])
            .collect()
    }
}

/// Are `x` and `y` inseparable: is there no cut with both outside it and in
/// different components of its complement?
pub fn inseparable(cs: &CutSystem, x: &str, y: &str) -> Result<bool> {
    if !cs.space().contains_vertex(x) {
        return Err(Error::Input(format!("unknown vertex '{x}'")));
    }
    if !cs.space().contains_vertex(y) {
        return Err(Error::Input(format!("unknown vertex '{y}'")));
    }
    if x == y {
        return Ok(true);
    }
    for cut in cs.cuts() {
        if cut.contains(x) || cut.contains(y) {
            continue;
        }
        let map = cs.space().component_map(cut)?;
        if map[x] != map[y] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is `p` inseparable as a set: does no cut of the family separate it?
pub fn is_inseparable_set(cs: &CutSystem, p: &VertexSet) -> Result<bool> {
    for cut in cs.cuts() {
        if cs.space().separates_set(cut, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All inclusion-maximal inseparable vertex sets, in canonical order, with
/// the default enumeration cap.
pub fn maximal_inseparable_sets(cs: &CutSystem) -> Result<Vec<VertexSet>> {
    maximal_inseparable_sets_with_limit(cs, DEFAULT_BLOB_LIMIT)
}

/// As [`maximal_inseparable_sets`], failing with [`Error::ResourceLimit`]
/// once more than `limit` sets have been found.
pub fn maximal_inseparable_sets_with_limit(cs: &CutSystem, limit: usize) -> Result<Vec<VertexSet>> {
    let rel = InseparabilityRelation::new(cs)?;
    let n = rel.vertices.len();
    let mut found: Vec<BTreeSet<usize>> = Vec::new();
    let r = BTreeSet::new();
    let p: BTreeSet<usize> = (0..n).collect();
    let x = BTreeSet::new();
    bron_kerbosch(&rel, r, p, x, limit, &mut found)?;
    let mut out: Vec<VertexSet> = found
        .into_iter()
        .map(|set| VertexSet::new(set.into_iter().map(|i| rel.vertices[i].clone())))
        .collect();
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    rel: &InseparabilityRelation,
    r: BTreeSet<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    limit: usize,
    found: &mut Vec<BTreeSet<usize>>,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            if found.len() >= limit {
                return Err(Error::ResourceLimit(format!(
                    "more than {limit} maximal inseparable sets"
                )));
            }
            found.push(r);
        }
        return Ok(());
    }
    // pivot: vertex of P ∪ X with the most related vertices in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| v != u && rel.related[u][v]).count())
        .unwrap();
    let todo: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| v == pivot || !rel.related[pivot][v])
        .collect();
    for v in todo {
        let neighbors = rel.neighbors(v);
        let mut next_r = r.clone();
        next_r.insert(v);
        let next_p = p.intersection(&neighbors).copied().collect();
        let next_x = x.intersection(&neighbors).copied().collect();
        bron_kerbosch(rel, next_r, next_p, next_x, limit, found)?;
        p.remove(&v);
        x.insert(v);
    }
    Ok(())
}

/// An element of the pretree: either a cut of the family or a blob
/// (a maximal inseparable set that is not a single cut). Identity is the
/// support; the kind is determined by it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PretreeElement {
    pub kind: ElementKind,
    pub support: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Cut,
    Blob,
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementKind::Cut => write!(f, "cut"),
            ElementKind::Blob => write!(f, "blob"),
        }
    }
}

impl PretreeElement {
    pub fn cut(support: VertexSet) -> Self {
        PretreeElement {
            kind: ElementKind::Cut,
            support,
        }
    }

    pub fn blob(support: VertexSet) -> Self {
        PretreeElement {
            kind: ElementKind::Blob,
            support,
        }
    }

    /// `kind:comma-joined-support`, the label used in exports and reports.
    pub fn label(&self) -> String {
        format!("{}:{}", self.kind, self.support.joined())
    }
}

impl fmt::Display for PretreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl PartialOrd for PretreeElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PretreeElement {
    /// Canonical element order: by support (supports are unique across the
    /// whole element set), kind as a tiebreak for robustness.
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .cmp(&other.support)
            .then(self.kind.cmp(&other.kind))
    }
}

/// The element set of the pretree: one `Cut` per family member and one
/// `Blob` per maximal inseparable set that does not coincide with a cut.
/// Canonically ordered; supports jointly cover every vertex.
pub fn pretree_elements(cs: &CutSystem) -> Result<Vec<PretreeElement>> {
    pretree_elements_with_limit(cs, DEFAULT_BLOB_LIMIT)
}

pub fn pretree_elements_with_limit(cs: &CutSystem, limit: usize) -> Result<Vec<PretreeElement>> {
    let maximal = maximal_inseparable_sets_with_limit(cs, limit)?;
    let cut_supports: BTreeSet<&VertexSet> = cs.cuts().iter().collect();
    let mut elements: Vec<PretreeElement> =
        cs.cuts().iter().cloned().map(PretreeElement::cut).collect();
    elements.extend(
        maximal
            .into_iter()
            .filter(|m| !cut_supports.contains(m))
            .map(PretreeElement::blob),
    );
    elements.sort();
    Ok(elements)
}

/// Equivalence classes of inseparability on the vertices outside every cut.
/// Restricted there the relation is transitive, so the classes partition
/// the free vertices; each class sits inside a maximal inseparable set.
pub fn quotient_blobs(cs: &CutSystem) -> Result<Vec<VertexSet>> {
    let rel = InseparabilityRelation::new(cs)?;
    let n = rel.vertices.len();
    let covered: Vec<bool> = rel
        .vertices
        .iter()
        .map(|v| cs.cuts().iter().any(|cut| cut.contains(v)))
        .collect();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if covered[i] || assigned[i] {
            continue;
        }
        let mut class = BTreeSet::new();
        for j in i..n {
            if !covered[j] && !assigned[j] && rel.related[i][j] {
                class.insert(rel.vertices[j].clone());
                assigned[j] = true;
            }
        }
        out.push(VertexSet::new(class));
    }
    out.sort();
    Ok(out)
}
