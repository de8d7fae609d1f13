//! The pretree of cuts and blobs with its two-stage betweenness relation.
//!
//! Stage one: a cut lies between two elements when it separates their
//! supports. Stage two: a blob `X` lies between `B` and `C` when the
//! stage-one half-open intervals `[B,X)` and `(X,C]` are disjoint. The full
//! relation is tabulated at construction; every derived notion (intervals,
//! natural orders, adjacency, medians, suprema) reads the table.
//!
//! For validated cut systems the four pretree axioms hold; they are checked
//! by [`Pretree::verify_axioms`], which reports violations instead of
//! assuming them — unvalidated systems are constructible precisely so that
//! their failures can be observed.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::blobs::{pretree_elements_with_limit, ElementKind, PretreeElement, DEFAULT_BLOB_LIMIT};
use crate::cuts::CutSystem;
use crate::error::{Error, Result};
use crate::space::{Space, VertexSet};

/// Which endpoints an interval carries. `HalfOpen` keeps the first-named
/// endpoint: `[A, B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalKind {
    Open,
    Closed,
    HalfOpen,
}

/// The elements between two endpoints, listed in the natural linear order
/// that puts the first-named endpoint least.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    start: PretreeElement,
    end: PretreeElement,
    kind: IntervalKind,
    members: Vec<PretreeElement>,
}

impl Interval {
    pub fn start(&self) -> &PretreeElement {
        &self.start
    }

    pub fn end(&self) -> &PretreeElement {
        &self.end
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn members(&self) -> &[PretreeElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// One pretree-axiom violation, with the elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// Axiom 1: `x ∈ (b, b)`.
    NonEmptySelfInterval {
        x: PretreeElement,
        b: PretreeElement,
    },
    /// Axiom 2: `(b, c)` and `(c, b)` disagree at `x`.
    Asymmetric {
        x: PretreeElement,
        b: PretreeElement,
        c: PretreeElement,
    },
    /// Axiom 3: `a ∈ (b, c)` and `b ∈ (a, c)` simultaneously.
    BetweennessLoop {
        a: PretreeElement,
        b: PretreeElement,
        c: PretreeElement,
    },
    /// Axiom 4: `d ∈ (a, c)` but `d ∉ (a, b] ∪ [b, c)`.
    IntervalNotCovered {
        d: PretreeElement,
        a: PretreeElement,
        b: PretreeElement,
        c: PretreeElement,
    },
}

impl AxiomViolation {
    pub fn axiom(&self) -> u8 {
        match self {
            AxiomViolation::NonEmptySelfInterval { .. } => 1,
            AxiomViolation::Asymmetric { .. } => 2,
            AxiomViolation::BetweennessLoop { .. } => 3,
            AxiomViolation::IntervalNotCovered { .. } => 4,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::NonEmptySelfInterval { x, b } => {
                write!(f, "axiom 1: {x} lies in ({b}, {b})")
            }
            AxiomViolation::Asymmetric { x, b, c } => {
                write!(
                    f,
                    "axiom 2: membership of {x} differs between ({b}, {c}) and ({c}, {b})"
                )
            }
            AxiomViolation::BetweennessLoop { a, b, c } => {
                write!(f, "axiom 3: {a} in ({b}, {c}) and {b} in ({a}, {c})")
            }
            AxiomViolation::IntervalNotCovered { d, a, b, c } => {
                write!(
                    f,
                    "axiom 4: {d} in ({a}, {c}) escapes ({a}, {b}] and [{b}, {c})"
                )
            }
        }
    }
}

/// Result of the exhaustive pretree-axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PretreeAxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl PretreeAxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Distinct axiom numbers that were violated, ascending.
    pub fn violated_axioms(&self) -> Vec<u8> {
        let mut axioms: Vec<u8> = self.violations.iter().map(AxiomViolation::axiom).collect();
        axioms.sort_unstable();
        axioms.dedup();
        axioms
    }
}

impl fmt::Display for PretreeAxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "all pretree axioms hold");
        }
        writeln!(f, "{} axiom violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// JSON export shape for a pretree.
#[derive(Serialize)]
struct PretreeJson<'a> {
    elements: &'a [PretreeElement],
    #[serde(skip_serializing_if = "Option::is_none")]
    betweenness: Option<Vec<[usize; 3]>>,
}

/// The full structure: element set plus the tabulated betweenness relation.
#[derive(Debug, Clone)]
pub struct Pretree {
    system: CutSystem,
    elements: Vec<PretreeElement>,
    index: BTreeMap<VertexSet, usize>,
    /// Element indices of the cuts, ascending.
    cut_elems: Vec<usize>,
    /// `sep[k][i][j]`: does the k-th cut separate element i from element j?
    sep: Vec<Vec<Vec<bool>>>,
    /// Flattened `n³` betweenness table: `x*n*n + b*n + c` ⇔ `x ∈ (b, c)`.
    between: Vec<bool>,
}

impl Pretree {
    pub fn new(system: CutSystem) -> Result<Self> {
        Self::with_limit(system, DEFAULT_BLOB_LIMIT)
    }

    pub fn with_limit(system: CutSystem, limit: usize) -> Result<Self> {
        let elements = pretree_elements_with_limit(&system, limit)?;
        let n = elements.len();
        let index: BTreeMap<VertexSet, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.support.clone(), i))
            .collect();
        let cut_elems: Vec<usize> = elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.kind == ElementKind::Cut)
            .map(|(i, _)| i)
            .collect();

        // Stage-one table: component ids touched by each element support
        // once per cut, then pairwise comparison.
        let mut sep = vec![vec![vec![false; n]; n]; cut_elems.len()];
        for (k, &cut_idx) in cut_elems.iter().enumerate() {
            let cut = &elements[cut_idx].support;
            let map = system.space().component_map(cut)?;
            let touched: Vec<Vec<usize>> = elements
                .iter()
                .map(|e| {
                    let mut ids: Vec<usize> = e
                        .support
                        .iter()
                        .filter_map(|v| map.get(v).copied())
                        .collect();
                    ids.sort_unstable();
                    ids.dedup();
                    ids
                })
                .collect();
            for i in 0..n {
                for j in i..n {
                    if touched[i].is_empty() || touched[j].is_empty() {
                        continue;
                    }
                    let only = touched[i][0];
                    let same_singleton =
                        touched[i].len() == 1 && touched[j].len() == 1 && touched[j][0] == only;
                    if !same_singleton {
                        sep[k][i][j] = true;
                        sep[k][j][i] = true;
                    }
                }
            }
        }

        let mut tree = Pretree {
            system,
            elements,
            index,
            cut_elems,
            sep,
            between: Vec::new(),
        };
        let mut between = vec![false; n * n * n];
        for x in 0..n {
            for b in 0..n {
                for c in 0..n {
                    between[x * n * n + b * n + c] = tree.compute_between(x, b, c);
                }
            }
        }
        tree.between = between;
        Ok(tree)
    }

    /// As [`Pretree::new`], then recomputes the betweenness relation from
    /// the definitions and verifies the axioms; any discrepancy is a
    /// consistency error.
    pub fn new_checked(system: CutSystem) -> Result<Self> {
        let tree = Self::new(system)?;
        tree.verify_cache()?;
        let report = tree.verify_axioms();
        if !report.is_ok() {
            return Err(Error::Consistency(format!(
                "pretree axioms violated:\n{report}"
            )));
        }
        Ok(tree)
    }

    fn cut_position(&self, elem: usize) -> Option<usize> {
        self.cut_elems.binary_search(&elem).ok()
    }

    /// Stage-one betweenness from the tables.
    fn sep_table(&self, cut_elem: usize, i: usize, j: usize) -> bool {
        let k = self.cut_position(cut_elem).expect("element is not a cut");
        self.sep[k][i][j]
    }

    fn compute_between(&self, x: usize, b: usize, c: usize) -> bool {
        if x == b || x == c {
            return false;
        }
        match self.elements[x].kind {
            ElementKind::Cut => self.sep_table(x, b, c),
            ElementKind::Blob => {
                if b == c {
                    return false;
                }
                // [B, X) ∩ (X, C] must be empty: the endpoints may sneak
                // into the other interval's cut scan, and any third cut may
                // land in both.
                if self.cut_position(b).is_some() && self.sep_table(b, x, c) {
                    return false;
                }
                if self.cut_position(c).is_some() && self.sep_table(c, b, x) {
                    return false;
                }
                for k in 0..self.cut_elems.len() {
                    if self.sep[k][b][x] && self.sep[k][x][c] {
                        return false;
                    }
                }
                true
            }
        }
    }

    /// Betweenness evaluated straight from the definition, with stage-one
    /// separation decided by the supplied predicate instead of the tables.
    fn between_from(
        &self,
        sep: &impl Fn(&VertexSet, &VertexSet, &VertexSet) -> bool,
        x: usize,
        b: usize,
        c: usize,
    ) -> bool {
        let sup = |i: usize| &self.elements[i].support;
        if x == b || x == c {
            return false;
        }
        match self.elements[x].kind {
            ElementKind::Cut => sep(sup(x), sup(b), sup(c)),
            ElementKind::Blob => {
                if b == c {
                    return false;
                }
                if self.elements[b].kind == ElementKind::Cut && sep(sup(b), sup(x), sup(c)) {
                    return false;
                }
                if self.elements[c].kind == ElementKind::Cut && sep(sup(c), sup(b), sup(x)) {
                    return false;
                }
                !self
                    .system
                    .cuts()
                    .iter()
                    .any(|cut| sep(cut, sup(b), sup(x)) && sep(cut, sup(x), sup(c)))
            }
        }
    }

    /// Recomputes every triple from the definitions — fresh component maps
    /// per cut, the literal witness-pair form of "separates from" — and
    /// compares with the table built at construction.
    pub fn verify_cache(&self) -> Result<()> {
        let space = self.system.space();
        let mut maps: BTreeMap<&VertexSet, BTreeMap<String, usize>> = BTreeMap::new();
        for cut in self.system.cuts() {
            maps.insert(cut, space.component_map(cut)?);
        }
        let sep = |a: &VertexSet, b: &VertexSet, c: &VertexSet| -> bool {
            let map = &maps[a];
            b.iter()
                .filter_map(|u| map.get(u))
                .any(|cu| c.iter().filter_map(|v| map.get(v)).any(|cv| cu != cv))
        };
        let n = self.elements.len();
        for x in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.between_from(&sep, x, b, c) != self.between_idx(x, b, c) {
                        return Err(Error::Consistency(format!(
                            "betweenness cache disagrees with recomputation at ({}, {}, {})",
                            self.elements[x], self.elements[b], self.elements[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn system(&self) -> &CutSystem {
        &self.system
    }

    pub fn space(&self) -> &Space {
        self.system.space()
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[PretreeElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, idx: usize) -> &PretreeElement {
        &self.elements[idx]
    }

    /// Index of the element with the given support, if any.
    pub fn index_of_support(&self, support: &VertexSet) -> Option<usize> {
        self.index.get(support).copied()
    }

    pub fn index_of(&self, elem: &PretreeElement) -> Result<usize> {
        match self.index.get(&elem.support) {
            Some(&i) if self.elements[i].kind == elem.kind => Ok(i),
            _ => Err(Error::Input(format!("unknown pretree element {elem}"))),
        }
    }

    /// Is `x` strictly between `b` and `c`?
    pub fn between(
        &self,
        x: &PretreeElement,
        b: &PretreeElement,
        c: &PretreeElement,
    ) -> Result<bool> {
        Ok(self.between_idx(self.index_of(x)?, self.index_of(b)?, self.index_of(c)?))
    }

    /// Index form of [`Pretree::between`].
    pub fn between_idx(&self, x: usize, b: usize, c: usize) -> bool {
        let n = self.elements.len();
        self.between[x * n * n + b * n + c]
    }

    fn in_closed_idx(&self, x: usize, a: usize, b: usize) -> bool {
        x == a || x == b || self.between_idx(x, a, b)
    }

    /// Members of the closed interval `[a, b]` in natural order, `a` first.
    ///
    /// The order is the rank of each member under `x ≤ y ⇔ x ∈ [a, y]`;
    /// if those ranks do not form a total order the pretree axioms are
    /// broken upstream and a consistency error is returned.
    pub fn interval_idx(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        let n = self.elements.len();
        let members: Vec<usize> = (0..n).filter(|&x| self.in_closed_idx(x, a, b)).collect();
        let k = members.len();
        let mut ranked: Vec<(usize, usize)> = Vec::with_capacity(k);
        for &x in &members {
            let rank = members
                .iter()
                .filter(|&&y| self.in_closed_idx(y, a, x))
                .count();
            ranked.push((rank, x));
        }
        ranked.sort_unstable();
        let total = ranked
            .iter()
            .enumerate()
            .all(|(i, &(rank, _))| rank == i + 1);
        if !total {
            return Err(Error::Consistency(format!(
                "interval [{}, {}] admits no natural linear order",
                self.elements[a], self.elements[b]
            )));
        }
        // Ranks 1..=k are a permutation, so the comparator is a total
        // order anchored at `a`; double-check pairwise consistency.
        let ordered: Vec<usize> = ranked.into_iter().map(|(_, x)| x).collect();
        for i in 0..k {
            for j in i + 1..k {
                if !self.in_closed_idx(ordered[i], a, ordered[j])
                    || (ordered[i] != ordered[j] && self.in_closed_idx(ordered[j], a, ordered[i]))
                {
                    return Err(Error::Consistency(format!(
                        "interval [{}, {}] order is not consistent",
                        self.elements[a], self.elements[b]
                    )));
                }
            }
        }
        Ok(ordered)
    }

    /// The interval between two elements with the requested endpoints.
    pub fn interval(
        &self,
        a: &PretreeElement,
        b: &PretreeElement,
        kind: IntervalKind,
    ) -> Result<Interval> {
        let ai = self.index_of(a)?;
        let bi = self.index_of(b)?;
        let mut ordered = self.interval_idx(ai, bi)?;
        match kind {
            IntervalKind::Closed => {}
            IntervalKind::Open => ordered.retain(|&x| x != ai && x != bi),
            IntervalKind::HalfOpen => ordered.retain(|&x| x != bi || x == ai),
        }
        Ok(Interval {
            start: a.clone(),
            end: b.clone(),
            kind,
            members: ordered
                .into_iter()
                .map(|x| self.elements[x].clone())
                .collect(),
        })
    }

    /// Exhaustively checks the four pretree axioms over all element triples.
    pub fn verify_axioms(&self) -> PretreeAxiomReport {
        let n = self.elements.len();
        let mut violations = Vec::new();
        let elem = |i: usize| self.elements[i].clone();

        for b in 0..n {
            for x in 0..n {
                if self.between_idx(x, b, b) {
                    violations.push(AxiomViolation::NonEmptySelfInterval {
                        x: elem(x),
                        b: elem(b),
                    });
                }
            }
        }
        for x in 0..n {
            for b in 0..n {
                for c in b + 1..n {
                    if self.between_idx(x, b, c) != self.between_idx(x, c, b) {
                        violations.push(AxiomViolation::Asymmetric {
                            x: elem(x),
                            b: elem(b),
                            c: elem(c),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in 0..n {
                    if self.between_idx(a, b, c) && self.between_idx(b, a, c) {
                        violations.push(AxiomViolation::BetweennessLoop {
                            a: elem(a),
                            b: elem(b),
                            c: elem(c),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for c in a + 1..n {
                for b in 0..n {
                    if b == a || b == c {
                        continue;
                    }
                    for d in 0..n {
                        if d != b
                            && self.between_idx(d, a, c)
                            && !self.between_idx(d, a, b)
                            && !self.between_idx(d, b, c)
                        {
                            violations.push(AxiomViolation::IntervalNotCovered {
                                d: elem(d),
                                a: elem(a),
                                b: elem(b),
                                c: elem(c),
                            });
                        }
                    }
                }
            }
        }
        PretreeAxiomReport { violations }
    }

    /// Are two distinct elements adjacent (empty open interval)?
    pub fn adjacent(&self, a: &PretreeElement, b: &PretreeElement) -> Result<bool> {
        let ai = self.index_of(a)?;
        let bi = self.index_of(b)?;
        if ai == bi {
            return Err(Error::input("adjacency requires two distinct elements"));
        }
        Ok(self.adjacent_idx(ai, bi))
    }

    pub fn adjacent_idx(&self, a: usize, b: usize) -> bool {
        (0..self.elements.len()).all(|x| !self.between_idx(x, a, b))
    }

    /// The unique member of `[a,b] ∩ [b,c] ∩ [a,c]`.
    pub fn median(
        &self,
        a: &PretreeElement,
        b: &PretreeElement,
        c: &PretreeElement,
    ) -> Result<PretreeElement> {
        Ok(self.elements
            [self.median_idx(self.index_of(a)?, self.index_of(b)?, self.index_of(c)?)?]
        .clone())
    }

    pub fn median_idx(&self, a: usize, b: usize, c: usize) -> Result<usize> {
        let n = self.elements.len();
        let hits: Vec<usize> = (0..n)
            .filter(|&x| {
                self.in_closed_idx(x, a, b)
                    && self.in_closed_idx(x, b, c)
                    && self.in_closed_idx(x, a, c)
            })
            .collect();
        match hits.as_slice() {
            [unique] => Ok(*unique),
            [] => Err(Error::Consistency(format!(
                "median of {}, {}, {} is empty",
                self.elements[a], self.elements[b], self.elements[c]
            ))),
            many => Err(Error::Consistency(format!(
                "median of {}, {}, {} has {} members",
                self.elements[a],
                self.elements[b],
                self.elements[c],
                many.len()
            ))),
        }
    }

    /// Least upper bound of `subset` in the interval's natural order. In a
    /// finite linear order this is the maximum of the subset.
    pub fn supremum(
        &self,
        interval: &Interval,
        subset: &[PretreeElement],
    ) -> Result<PretreeElement> {
        if subset.is_empty() {
            return Err(Error::input("supremum of an empty subset"));
        }
        let position: BTreeMap<&PretreeElement, usize> = interval
            .members
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut best: Option<usize> = None;
        for e in subset {
            let Some(&pos) = position.get(e) else {
                return Err(Error::Input(format!("element {e} is not in the interval")));
            };
            best = Some(best.map_or(pos, |b: usize| b.max(pos)));
        }
        Ok(interval.members[best.unwrap()].clone())
    }

    /// Validates that `chain` is linearly ordered and returns the cuts that
    /// meet some closed interval spanned by the chain, in canonical order.
    /// Those cuts witness that every nondegenerate interval of the chain
    /// contains one; a chain violating that would contradict the
    /// construction and yields a consistency error.
    pub fn preseparability_witness(&self, chain: &[PretreeElement]) -> Result<Vec<PretreeElement>> {
        let mut idxs = Vec::with_capacity(chain.len());
        for e in chain {
            let i = self.index_of(e)?;
            if idxs.contains(&i) {
                return Err(Error::Input(format!("duplicate chain element {e}")));
            }
            idxs.push(i);
        }
        // Every distinct triple must have exactly one middle element.
        for (p, &x) in idxs.iter().enumerate() {
            for (q, &y) in idxs.iter().enumerate().skip(p + 1) {
                for &z in idxs.iter().skip(q + 1) {
                    let middles = usize::from(self.between_idx(x, y, z))
                        + usize::from(self.between_idx(y, x, z))
                        + usize::from(self.between_idx(z, x, y));
                    if middles != 1 {
                        return Err(Error::input("chain is not linearly ordered"));
                    }
                }
            }
        }
        let mut witness_idxs: Vec<usize> = Vec::new();
        for &k in &self.cut_elems {
            let in_some_interval = idxs
                .iter()
                .enumerate()
                .any(|(p, &a)| idxs[p..].iter().any(|&b| self.in_closed_idx(k, a, b)));
            if in_some_interval {
                witness_idxs.push(k);
            }
        }
        // Density: every pair of distinct chain elements must meet the
        // witness set inside its closed interval.
        for (p, &a) in idxs.iter().enumerate() {
            for &b in idxs.iter().skip(p + 1) {
                let covered = witness_idxs.iter().any(|&q| self.in_closed_idx(q, a, b));
                if !covered {
                    return Err(Error::Consistency(format!(
                        "no cut meets [{}, {}] along the chain",
                        self.elements[a], self.elements[b]
                    )));
                }
            }
        }
        Ok(witness_idxs
            .into_iter()
            .map(|k| self.elements[k].clone())
            .collect())
    }

    /// Deterministic JSON export: elements, and optionally the full triple
    /// relation as `[x, b, c]` index triples meaning `x ∈ (b, c)`.
    pub fn to_json(&self, include_betweenness: bool) -> String {
        let betweenness = include_betweenness.then(|| {
            let n = self.elements.len();
            let mut triples = Vec::new();
            for x in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.between_idx(x, b, c) {
                            triples.push([x, b, c]);
                        }
                    }
                }
            }
            triples
        });
        serde_json::to_string_pretty(&PretreeJson {
            elements: &self.elements,
            betweenness,
        })
        .expect("pretree serialization cannot fail")
    }
}
