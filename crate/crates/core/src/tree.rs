//! Simplicial-tree realization of the pretree.
//!
//! Nodes are the pretree elements; edges join adjacent elements (empty open
//! interval). The construction verifies that the result is a tree and that
//! the unique tree path between any two nodes lists exactly the closed
//! interval between them, in order. Both facts are guaranteed for validated
//! systems, so a failure here is reported loudly as a consistency error
//! rather than repaired.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::blobs::PretreeElement;
use crate::error::{Error, Result};
use crate::pretree::Pretree;

/// Export format for a realized tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

/// A finite tree with unit-length edges; nodes carry pretree elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialTree {
    nodes: Vec<PretreeElement>,
    /// Node-index pairs `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
}

/// Realizes a pretree as a simplicial tree and verifies tree-ness and
/// path/interval agreement for every node pair.
pub fn realize(p: &Pretree) -> Result<SimplicialTree> {
    let n = p.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if p.adjacent_idx(i, j) {
                edges.push((i, j));
            }
        }
    }
    let tree = SimplicialTree {
        nodes: p.elements().to_vec(),
        edges,
    };

    if n > 0 && tree.edges.len() != n - 1 {
        return Err(Error::Consistency(format!(
            "realization has {} edges for {} nodes; a tree needs {}",
            tree.edges.len(),
            n,
            n - 1
        )));
    }
    let reached = tree.bfs_parents(0).iter().filter(|p| p.is_some()).count();
    if reached != n {
        return Err(Error::Consistency(format!(
            "realization is disconnected: reached {reached} of {n} nodes"
        )));
    }
    for a in 0..n {
        for b in 0..n {
            let path = tree.tree_path(a, b)?;
            let interval = p.interval_idx(a, b)?;
            if path != interval {
                return Err(Error::Consistency(format!(
                    "tree path and interval disagree between {} and {}",
                    p.element(a),
                    p.element(b)
                )));
            }
        }
    }
    Ok(tree)
}

impl SimplicialTree {
    pub fn nodes(&self) -> &[PretreeElement] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Index of the node carrying `elem`, if present.
    pub fn index_of(&self, elem: &PretreeElement) -> Option<usize> {
        self.nodes.iter().position(|e| e == elem)
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
    }

    /// BFS parent array rooted at `root`; `parent[root] = root`.
    fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.nodes.len()];
        if self.nodes.is_empty() {
            return parent;
        }
        parent[root] = Some(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if parent[w].is_none() {
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// The unique simple path from `a` to `b`, inclusive, as node indices.
    pub fn tree_path(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        let n = self.nodes.len();
        if a >= n || b >= n {
            return Err(Error::input("node index out of range"));
        }
        let parent = self.bfs_parents(a);
        if parent[b].is_none() {
            return Err(Error::Consistency(format!(
                "nodes {a} and {b} are not connected"
            )));
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = parent[v].unwrap();
            path.push(v);
        }
        path.reverse();
        Ok(path)
    }

    /// As [`SimplicialTree::tree_path`], but over node elements.
    pub fn tree_path_elems(
        &self,
        a: &PretreeElement,
        b: &PretreeElement,
    ) -> Result<Vec<&PretreeElement>> {
        let ai = self
            .index_of(a)
            .ok_or_else(|| Error::Input(format!("unknown node {a}")))?;
        let bi = self
            .index_of(b)
            .ok_or_else(|| Error::Input(format!("unknown node {b}")))?;
        Ok(self
            .tree_path(ai, bi)?
            .into_iter()
            .map(|i| &self.nodes[i])
            .collect())
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => self.to_json(),
        }
    }

    /// DOT text with one node per element, labelled `kind:support`;
    /// byte-deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", node.label()));
        }
        for (i, j) in &self.edges {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON text in the documented schema:
    /// `{"nodes": [{"kind", "support"}...], "edges": [[i, j]...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree serialization cannot fail")
    }

    /// Parses the JSON schema emitted by [`SimplicialTree::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let tree: SimplicialTree =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("bad tree JSON: {e}")))?;
        let n = tree.nodes.len();
        for &(i, j) in &tree.edges {
            if i >= n || j >= n {
                return Err(Error::input("tree JSON edge references a missing node"));
            }
        }
        Ok(tree)
    }
}
