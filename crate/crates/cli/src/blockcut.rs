//! Classical block-cut tree oracle.
//!
//! With the cut family set to the articulation singletons, the pipeline's
//! blobs must be the biconnected blocks and its realized tree must be
//! isomorphic to the classical block-cut tree. This module computes both
//! sides: the blocks and articulation vertices come from the standard DFS
//! edge-stack algorithm (written here from scratch, independent of the
//! library's low-link pass), and trees are compared by a canonical rooted
//! encoding from their centers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use septree::{
    articulation_cuts, realize, CutSystem, ElementKind, Error, Pretree, PretreeElement, Result,
    Space, VertexSet,
};

/// Biconnected blocks and articulation vertices from one DFS.
pub struct Biconnectivity {
    pub blocks: Vec<VertexSet>,
    pub articulations: Vec<VertexSet>,
}

pub fn biconnectivity(space: &Space) -> Biconnectivity {
    let vertices: Vec<&str> = space.vertices().collect();
    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let n = vertices.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|u| space.neighbors(vertices[u]).map(|w| index[w]).collect())
        .collect();

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
    let mut is_articulation = vec![false; n];

    // Explicit DFS frames: (vertex, parent, next neighbor position).
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut root_children = 0usize;
    while let Some(&mut (u, parent, ref mut pos)) = frames.last_mut() {
        if *pos < adj[u].len() {
            let w = adj[u][*pos];
            *pos += 1;
            if disc[w] == usize::MAX {
                if u == 0 {
                    root_children += 1;
                }
                edge_stack.push((u, w));
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                frames.push((w, u, 0));
            } else if w != parent && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&mut (p, _, _)) = frames.last_mut() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    // edges down to (p, u) form one block
                    let mut block = BTreeSet::new();
                    while let Some((x, y)) = edge_stack.pop() {
                        block.insert(x);
                        block.insert(y);
                        if (x, y) == (p, u) {
                            break;
                        }
                    }
                    blocks.push(block);
                    if p != 0 {
                        is_articulation[p] = true;
                    }
                }
            }
        }
    }
    is_articulation[0] = root_children >= 2;

    let to_set = |ids: &BTreeSet<usize>| VertexSet::new(ids.iter().map(|&i| vertices[i]));
    let mut blocks: Vec<VertexSet> = blocks.iter().map(to_set).collect();
    blocks.sort();
    let articulations: Vec<VertexSet> = (0..n)
        .filter(|&i| is_articulation[i])
        .map(|i| VertexSet::new([vertices[i]]))
        .collect();
    Biconnectivity {
        blocks,
        articulations,
    }
}

/// The classical block-cut tree: one blob node per block, one cut node per
/// articulation vertex, edges by membership. Nodes are canonically sorted.
pub struct BlockCutTree {
    pub nodes: Vec<PretreeElement>,
    pub edges: Vec<(usize, usize)>,
}

pub fn block_cut_tree(space: &Space) -> BlockCutTree {
    let bc = biconnectivity(space);
    let mut nodes: Vec<PretreeElement> = bc
        .articulations
        .iter()
        .cloned()
        .map(PretreeElement::cut)
        .chain(bc.blocks.iter().cloned().map(PretreeElement::blob))
        .collect();
    nodes.sort();
    let mut edges = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        if a.kind != ElementKind::Cut {
            continue;
        }
        let v = a.support.first().unwrap();
        for (j, b) in nodes.iter().enumerate() {
            if b.kind == ElementKind::Blob && b.support.contains(v) {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    BlockCutTree { nodes, edges }
}

/// Canonical encoding of a labelled unrooted tree: root at the center(s),
/// encode recursively with sorted child encodings, take the least.
pub fn canonical_encoding(nodes: &[PretreeElement], edges: &[(usize, usize)]) -> String {
    let n = nodes.len();
    if n == 0 {
        return String::new();
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }

    // peel leaves to find the 1- or 2-vertex center
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] <= 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();

    fn encode(
        v: usize,
        parent: Option<usize>,
        adj: &[Vec<usize>],
        nodes: &[PretreeElement],
    ) -> String {
        let mut child_codes: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| encode(w, Some(v), adj, nodes))
            .collect();
        child_codes.sort();
        format!("({}|{})", nodes[v].label(), child_codes.join(""))
    }

    centers
        .iter()
        .map(|&c| encode(c, None, &adj, nodes))
        .min()
        .unwrap()
}

/// Outcome of comparing the pipeline against the classical construction.
#[derive(Debug, Clone, Serialize)]
pub struct BlockCutComparison {
    pub blobs_match: bool,
    pub cuts_match: bool,
    pub trees_isomorphic: bool,
    pub pipeline_blobs: Vec<VertexSet>,
    pub classical_blocks: Vec<VertexSet>,
    pub pipeline_cuts: Vec<VertexSet>,
    pub classical_articulations: Vec<VertexSet>,
}

impl BlockCutComparison {
    pub fn is_match(&self) -> bool {
        self.blobs_match && self.cuts_match && self.trees_isomorphic
    }
}

impl fmt::Display for BlockCutComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "blobs = blocks: {}",
            if self.blobs_match { "yes" } else { "NO" }
        )?;
        writeln!(
            f,
            "cuts = articulations: {}",
            if self.cuts_match { "yes" } else { "NO" }
        )?;
        write!(
            f,
            "tree = block-cut tree: {}",
            if self.trees_isomorphic { "yes" } else { "NO" }
        )?;
        if !self.blobs_match {
            write!(
                f,
                "\n  pipeline blobs: {:?}\n  classical blocks: {:?}",
                self.pipeline_blobs
                    .iter()
                    .map(VertexSet::joined)
                    .collect::<Vec<_>>(),
                self.classical_blocks
                    .iter()
                    .map(VertexSet::joined)
                    .collect::<Vec<_>>()
            )?;
        }
        if !self.cuts_match {
            write!(
                f,
                "\n  pipeline cuts: {:?}\n  classical articulations: {:?}",
                self.pipeline_cuts
                    .iter()
                    .map(VertexSet::joined)
                    .collect::<Vec<_>>(),
                self.classical_articulations
                    .iter()
                    .map(VertexSet::joined)
                    .collect::<Vec<_>>()
            )?;
        }
        Ok(())
    }
}

/// Runs the full pipeline with articulation cuts and compares blobs, cuts
/// and the realized tree against the classical block-cut construction.
pub fn compare_with_pipeline(space: &Space) -> Result<BlockCutComparison> {
    let cuts = articulation_cuts(space);
    let cs = CutSystem::new(space.clone(), cuts).map_err(|e| match e {
        // articulation singletons always satisfy the three conditions
        Error::Axioms(report) => {
            Error::Consistency(format!("articulation cuts failed validation:\n{report}"))
        }
        other => other,
    })?;
    let pipeline_cuts = cs.cuts().to_vec();
    let pretree = Pretree::new(cs)?;
    let tree = realize(&pretree)?;
    let pipeline_blobs: Vec<VertexSet> = pretree
        .elements()
        .iter()
        .filter(|e| e.kind == ElementKind::Blob)
        .map(|e| e.support.clone())
        .collect();

    let classical = block_cut_tree(space);
    let bc = biconnectivity(space);

    Ok(BlockCutComparison {
        blobs_match: pipeline_blobs == bc.blocks,
        cuts_match: pipeline_cuts == bc.articulations,
        trees_isomorphic: canonical_encoding(tree.nodes(), tree.edges())
            == canonical_encoding(&classical.nodes, &classical.edges),
        pipeline_blobs,
        classical_blocks: bc.blocks,
        pipeline_cuts,
        classical_articulations: bc.articulations,
    })
}
