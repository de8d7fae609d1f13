//! Input formats shared with the command-line front end.
//!
//! Graphs are accepted either as JSON
//! (`{"vertices": ["a", ...], "edges": [["a","b"], ...]}`) or as a plain
//! edge list (one `u v` pair per line, vertices inferred, `#` comments
//! allowed). Cut families and vertex permutations are JSON.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::space::{Space, VertexSet};

#[derive(Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// Parses a graph, auto-detecting JSON (first non-space byte `{`) versus
/// edge-list text.
pub fn parse_graph(text: &str) -> Result<Space> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_graph_json(text: &str) -> Result<Space> {
    let graph: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad graph JSON: {e}")))?;
    let mut seen = std::collections::BTreeSet::new();
    for v in &graph.vertices {
        if !seen.insert(v) {
            return Err(Error::Input(format!("duplicate vertex '{v}'")));
        }
    }
    Space::new(graph.vertices, graph.edges)
}

pub fn parse_edge_list(text: &str) -> Result<Space> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(u), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Input(format!(
                "line {}: expected 'u v', got '{line}'",
                lineno + 1
            )));
        };
        edges.push((u.to_owned(), v.to_owned()));
    }
    if edges.is_empty() {
        return Err(Error::input("edge list is empty"));
    }
    Space::from_edges(edges)
}

/// Parses a cut family: a JSON list of vertex-identifier lists.
pub fn parse_cuts(text: &str) -> Result<Vec<VertexSet>> {
    let raw: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad cuts JSON: {e}")))?;
    Ok(raw.into_iter().map(VertexSet::new).collect())
}

/// Parses a vertex permutation: a JSON object mapping vertex to vertex.
pub fn parse_permutation(text: &str) -> Result<BTreeMap<String, String>> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("bad permutation JSON: {e}")))
}

/// Serializes a space in the JSON graph format.
pub fn graph_to_json(space: &Space) -> String {
    let vertices: Vec<&str> = space.vertices().collect();
    let edges: Vec<(&str, &str)> = space.edges().collect();
    serde_json::to_string_pretty(&serde_json::json!({
        "vertices": vertices,
        "edges": edges,
    }))
    .expect("graph serialization cannot fail")
}

/// Serializes a cut family in the JSON cuts format.
pub fn cuts_to_json(cuts: &[VertexSet]) -> String {
    let raw: Vec<Vec<&str>> = cuts.iter().map(|c| c.iter().collect()).collect();
    serde_json::to_string_pretty(&raw).expect("cuts serialization cannot fail")
}
