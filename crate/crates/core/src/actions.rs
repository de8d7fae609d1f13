//! Transport of graph symmetries to the pretree and its tree.
//!
//! A vertex permutation that preserves the edge set and the cut family
//! permutes supports, hence elements, hence the whole structure. `induce`
//! computes the element permutation and `verify_equivariance` checks that
//! it respects betweenness and tree adjacency.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cuts::CutSystem;
use crate::error::{Error, Result};
use crate::pretree::Pretree;
use crate::space::{Space, VertexSet};

/// Cap for brute-force automorphism enumeration.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// An edge-preserving vertex permutation of a space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Automorphism {
    perm: BTreeMap<String, String>,
}

impl Automorphism {
    /// Validates that `perm` is a bijection of the vertex set preserving
    /// the edge set.
    pub fn new(space: &Space, perm: BTreeMap<String, String>) -> Result<Self> {
        if perm.len() != space.vertex_count() {
            return Err(Error::input(
                "permutation must cover every vertex exactly once",
            ));
        }
        let mut image = BTreeSet::new();
        for (v, w) in &perm {
            if !space.contains_vertex(v) || !space.contains_vertex(w) {
                return Err(Error::Input(format!(
                    "permutation entry {v} -> {w} leaves the vertex set"
                )));
            }
            if !image.insert(w) {
                return Err(Error::Input(format!(
                    "permutation maps two vertices to '{w}'"
                )));
            }
        }
        for (u, v) in space.edges() {
            if !space.has_edge(&perm[u], &perm[v]) {
                return Err(Error::Input(format!(
                    "permutation is not an automorphism: edge ({u}, {v}) maps to a non-edge"
                )));
            }
        }
        Ok(Automorphism { perm })
    }

    /// As [`Automorphism::new`], additionally requiring that the cut family
    /// is preserved setwise.
    pub fn for_system(cs: &CutSystem, perm: BTreeMap<String, String>) -> Result<Self> {
        let g = Automorphism::new(cs.space(), perm)?;
        if !g.preserves_cuts(cs) {
            return Err(Error::input("permutation does not preserve the cut family"));
        }
        Ok(g)
    }

    pub fn identity(space: &Space) -> Self {
        Automorphism {
            perm: space
                .vertices()
                .map(|v| (v.to_owned(), v.to_owned()))
                .collect(),
        }
    }

    pub fn apply(&self, v: &str) -> &str {
        &self.perm[v]
    }

    pub fn apply_set(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.perm[v].clone()).collect()
    }

    /// `{g(A) : A ∈ 𝒜} = 𝒜`?
    pub fn preserves_cuts(&self, cs: &CutSystem) -> bool {
        cs.cuts()
            .iter()
            .all(|cut| cs.cuts().contains(&self.apply_set(cut)))
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: other
                .perm
                .iter()
                .map(|(v, w)| (v.clone(), self.perm[w].clone()))
                .collect(),
        }
    }

    pub fn mapping(&self) -> &BTreeMap<String, String> {
        &self.perm
    }
}

/// All automorphisms of the space by brute force over vertex permutations.
/// Guarded to at most [`MAX_ENUMERATION_VERTICES`] vertices.
pub fn enumerate_automorphisms(space: &Space) -> Result<Vec<Automorphism>> {
    let n = space.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "automorphism enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )));
    }
    let vertices: Vec<&str> = space.vertices().collect();
    let mut indices: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    permute(&mut indices, 0, &mut |perm| {
        let map: BTreeMap<String, String> = vertices
            .iter()
            .zip(perm.iter())
            .map(|(v, &i)| ((*v).to_owned(), vertices[i].to_owned()))
            .collect();
        if let Ok(g) = Automorphism::new(space, map) {
            out.push(g);
        }
    });
    Ok(out)
}

fn permute(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, visit);
        items.swap(start, i);
    }
}

/// The element permutation induced by `g`: each element maps to the element
/// with the image support and the same kind. Failure to find an image, a
/// kind mismatch, or a non-bijective result means `g` does not preserve the
/// cut family (or something is broken) and is a consistency error.
pub fn induce(p: &Pretree, g: &Automorphism) -> Result<Vec<usize>> {
    let n = p.len();
    let mut image = Vec::with_capacity(n);
    let mut hit = vec![false; n];
    for elem in p.elements() {
        let mapped_support = g.apply_set(&elem.support);
        let Some(target) = p.index_of_support(&mapped_support) else {
            return Err(Error::Consistency(format!(
                "image of {elem} has support {mapped_support}, which is not an element"
            )));
        };
        if p.element(target).kind != elem.kind {
            return Err(Error::Consistency(format!(
                "image of {elem} changes kind to {}",
                p.element(target)
            )));
        }
        if hit[target] {
            return Err(Error::Consistency(format!(
                "two elements map onto {}",
                p.element(target)
            )));
        }
        hit[target] = true;
        image.push(target);
    }
    Ok(image)
}

/// Equivariance failures of an induced map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    /// Triples `(x, b, c)` of element indices where betweenness is not
    /// preserved.
    pub betweenness_violations: Vec<(usize, usize, usize)>,
    /// Adjacent pairs whose images are not adjacent.
    pub edge_violations: Vec<(usize, usize)>,
}

impl EquivarianceReport {
    pub fn is_ok(&self) -> bool {
        self.betweenness_violations.is_empty() && self.edge_violations.is_empty()
    }
}

/// Checks that the induced map preserves betweenness on all triples and
/// adjacency on all realized tree edges.
pub fn verify_equivariance(p: &Pretree, g: &Automorphism) -> Result<EquivarianceReport> {
    let image = induce(p, g)?;
    let n = p.len();
    let mut report = EquivarianceReport {
        betweenness_violations: Vec::new(),
        edge_violations: Vec::new(),
    };
    for x in 0..n {
        for b in 0..n {
            for c in 0..n {
                if p.between_idx(x, b, c) != p.between_idx(image[x], image[b], image[c]) {
                    report.betweenness_violations.push((x, b, c));
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if p.adjacent_idx(i, j) && !p.adjacent_idx(image[i], image[j]) {
                report.edge_violations.push((i, j));
            }
        }
    }
    Ok(report)
}
