//! Finite model of a connected topological space.
//!
//! The space is a finite connected undirected graph. Every vertex set plays
//! the role of a closed subset; removing a set induces a subgraph whose
//! connected components stand in for the quasicomponents of the complement
//! (in finite graphs the two notions coincide). All separation predicates
//! below are phrased in terms of those components.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A canonically ordered, duplicate-free set of vertex identifiers.
///
/// Equality, ordering and hashing are structural, so a `VertexSet` can act
/// as the identity of cuts, blobs and separation sides throughout the crate.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<String>);

impl VertexSet {
    pub fn new<I, S>(members: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VertexSet(members.into_iter().map(Into::into).collect())
    }

    pub fn empty() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0.contains(v)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn first(&self) -> Option<&str> {
        self.0.iter().next().map(String::as_str)
    }

    /// Members joined with commas, e.g. `a,b,c`. Used for labels and CLI
    /// element selectors.
    pub fn joined(&self) -> String {
        self.0.iter().cloned().collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.joined())
    }
}

impl<S: Into<String>> FromIterator<S> for VertexSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// A finite connected undirected graph.
///
/// Invariants enforced at construction: at least two vertices, no
/// self-loops, no duplicate edges, every edge endpoint known, connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    vertices: BTreeSet<String>,
    edges: BTreeSet<(String, String)>,
    adjacency: BTreeMap<String, BTreeSet<String>>,
}

impl Space {
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let vertices: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.len() < 2 {
            return Err(Error::input("a space needs at least 2 vertices"));
        }
        let mut edge_set = BTreeSet::new();
        let mut adjacency: BTreeMap<String, BTreeSet<String>> = vertices
            .iter()
            .map(|v| (v.clone(), BTreeSet::new()))
            .collect();
        for (u, v) in edges {
            let (u, v) = (u.into(), v.into());
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex '{u}'")));
            }
            if !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) references an unknown vertex"
                )));
            }
            let key = if u < v {
                (u.clone(), v.clone())
            } else {
                (v.clone(), u.clone())
            };
            if !edge_set.insert(key) {
                return Err(Error::Input(format!("duplicate edge ({u}, {v})")));
            }
            adjacency.get_mut(&u).unwrap().insert(v.clone());
            adjacency.get_mut(&v).unwrap().insert(u);
        }
        let space = Space {
            vertices,
            edges: edge_set,
            adjacency,
        };
        if space.components(&VertexSet::empty())?.len() != 1 {
            return Err(Error::input("graph is not connected"));
        }
        Ok(space)
    }

    /// Builds a space from an edge list alone; the vertex set is inferred.
    pub fn from_edges<E, T>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (T, T)>,
        T: Into<String>,
    {
        let edges: Vec<(String, String)> = edges
            .into_iter()
            .map(|(u, v)| (u.into(), v.into()))
            .collect();
        let vertices: BTreeSet<String> = edges
            .iter()
            .flat_map(|(u, v)| [u.clone(), v.clone()])
            .collect();
        Space::new(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(self.vertices.clone())
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges.iter().map(|(u, v)| (u.as_str(), v.as_str()))
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        let key = if u < v {
            (u.to_owned(), v.to_owned())
        } else {
            (v.to_owned(), u.to_owned())
        };
        self.edges.contains(&key)
    }

    pub fn neighbors(&self, v: &str) -> impl Iterator<Item = &str> {
        self.adjacency
            .get(v)
            .into_iter()
            .flatten()
            .map(String::as_str)
    }

    fn check_known(&self, set: &VertexSet, what: &str) -> Result<()> {
        for v in set.iter() {
            if !self.vertices.contains(v) {
                return Err(Error::Input(format!("unknown vertex '{v}' in {what}")));
            }
        }
        Ok(())
    }

    /// Connected components of the subgraph induced on `V \ removed`.
    ///
    /// Components are pairwise disjoint, their union is `V \ removed`, and
    /// the returned order is by least contained vertex.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_known(removed, "removed set")?;
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices.iter().map(String::as_str) {
            if removed.contains(start) || seen.contains(start) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                component.insert(v.to_owned());
                for w in self.neighbors(v) {
                    if !removed.contains(w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet(component));
        }
        Ok(out)
    }

    /// Maps each vertex of `V \ removed` to the index of its component in
    /// the canonical component order. Batch form of [`Space::components`].
    pub fn component_map(&self, removed: &VertexSet) -> Result<BTreeMap<String, usize>> {
        let mut map = BTreeMap::new();
        for (idx, comp) in self.components(removed)?.into_iter().enumerate() {
            for v in comp.iter() {
                map.insert(v.to_owned(), idx);
            }
        }
        Ok(map)
    }

    /// Does removing `a` disconnect the space?
    pub fn separates(&self, a: &VertexSet) -> Result<bool> {
        Ok(self.components(a)?.len() >= 2)
    }

    /// Does `a` separate the set `p`: are there two members of `p \ a` in
    /// different components of `Z \ a`?
    pub fn separates_set(&self, a: &VertexSet, p: &VertexSet) -> Result<bool> {
        self.check_known(p, "separated set")?;
        let map = self.component_map(a)?;
        let mut seen_comp: Option<usize> = None;
        for v in p.iter() {
            let Some(&c) = map.get(v) else { continue };
            match seen_comp {
                None => seen_comp = Some(c),
                Some(prev) if prev != c => return Ok(true),
                Some(_) => {}
            }
        }
        Ok(false)
    }

    /// Does `a` separate `b` from `c`: is there a member of `b \ a` and a
    /// member of `c \ a` in different components of `Z \ a`?
    pub fn separates_from(&self, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<bool> {
        self.check_known(b, "first set")?;
        self.check_known(c, "second set")?;
        let map = self.component_map(a)?;
        let b_comps: BTreeSet<usize> = b.iter().filter_map(|v| map.get(v).copied()).collect();
        let c_comps: BTreeSet<usize> = c.iter().filter_map(|v| map.get(v).copied()).collect();
        if b_comps.is_empty() || c_comps.is_empty() {
            return Ok(false);
        }
        // Some pair of witnesses lies in distinct components iff the two
        // component-id sets are not both the same singleton.
        Ok(b_comps.union(&c_comps).count() >= 2)
    }

    /// Canonical separation witnessing that `a` separates `b` from `c`.
    ///
    /// Side `u` is the union of the components of `Z \ a` that meet `b \ a`;
    /// side `v` is everything else. Returns `None` when `a` does not
    /// separate `b` from `c`, or when `c \ a` spills onto side `u` (then no
    /// separation cleanly splits the two sets).
    pub fn separation_between(
        &self,
        a: &VertexSet,
        b: &VertexSet,
        c: &VertexSet,
    ) -> Result<Option<Separation>> {
        if !self.separates_from(a, b, c)? {
            return Ok(None);
        }
        let comps = self.components(a)?;
        let mut side_u = VertexSet::empty();
        let mut side_v = VertexSet::empty();
        for comp in &comps {
            if b.iter().any(|v| comp.contains(v)) {
                side_u = side_u.union(comp);
            } else {
                side_v = side_v.union(comp);
            }
        }
        let c_rest = c.difference(a);
        if !c_rest.is_subset(&side_v) {
            return Ok(None);
        }
        Ok(Some(Separation::new(self, a.clone(), side_u, side_v)?))
    }
}

/// A separation of `Z \ removed` into two nonempty sides with no edge
/// between them; each side is a union of components of `Z \ removed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    removed: VertexSet,
    side_u: VertexSet,
    side_v: VertexSet,
}

impl Separation {
    pub fn new(
        space: &Space,
        removed: VertexSet,
        side_u: VertexSet,
        side_v: VertexSet,
    ) -> Result<Self> {
        if side_u.is_empty() || side_v.is_empty() {
            return Err(Error::input("separation sides must be nonempty"));
        }
        if !side_u.intersection(&side_v).is_empty() {
            return Err(Error::input("separation sides must be disjoint"));
        }
        let complement = space.vertex_set().difference(&removed);
        if side_u.union(&side_v) != complement {
            return Err(Error::input(
                "separation sides must cover the complement of the removed set",
            ));
        }
        for u in side_u.iter() {
            for w in space.neighbors(u) {
                if side_v.contains(w) {
                    return Err(Error::Input(format!(
                        "edge ({u}, {w}) crosses the separation"
                    )));
                }
            }
        }
        Ok(Separation {
            removed,
            side_u,
            side_v,
        })
    }

    pub fn removed(&self) -> &VertexSet {
        &self.removed
    }

    pub fn side_u(&self) -> &VertexSet {
        &self.side_u
    }

    pub fn side_v(&self) -> &VertexSet {
        &self.side_v
    }

    /// Refines two separations of the same removed set into
    /// `(U1 ∩ U2, V1 ∪ V2)`. The intersection of the `u`-sides must be
    /// nonempty.
    pub fn refine(&self, space: &Space, other: &Separation) -> Result<Separation> {
        if self.removed != other.removed {
            return Err(Error::input("separations remove different sets"));
        }
        let side_u = self.side_u.intersection(&other.side_u);
        if side_u.is_empty() {
            return Err(Error::input("refinement requires overlapping u-sides"));
        }
        let side_v = self.side_v.union(&other.side_v);
        Separation::new(space, self.removed.clone(), side_u, side_v)
    }
}
