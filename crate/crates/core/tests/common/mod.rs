//! Shared test support: small graph builders and naive reference
//! implementations ("oracles") that are deliberately independent of the
//! library's algorithms. Reachability is transitive matrix closure instead
//! of BFS; maximal inseparable sets come from exhaustive subset
//! enumeration instead of clique search; articulation vertices from the
//! removal test instead of low-link.

#![allow(dead_code)]

use septree::{CutSystem, ElementKind, PretreeElement, Space, VertexSet};

pub fn vs(members: &[&str]) -> VertexSet {
    VertexSet::new(members.iter().copied())
}

pub fn blob(members: &[&str]) -> PretreeElement {
    PretreeElement::blob(vs(members))
}

pub fn cut(members: &[&str]) -> PretreeElement {
    PretreeElement::cut(vs(members))
}

pub fn path(names: &[&str]) -> Space {
    Space::from_edges(names.windows(2).map(|w| (w[0], w[1]))).unwrap()
}

pub fn cycle4() -> Space {
    Space::from_edges([("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]).unwrap()
}

pub fn star() -> Space {
    Space::from_edges([("v", "x"), ("v", "y"), ("v", "z")]).unwrap()
}

pub fn two_triangles() -> Space {
    Space::from_edges([
        ("v", "a1"),
        ("v", "a2"),
        ("a1", "a2"),
        ("v", "b1"),
        ("v", "b2"),
        ("b1", "b2"),
    ])
    .unwrap()
}

/// The [-1..1] x [0..1] unit grid with a tail up from (0,1) to (0,2).
pub fn corners_space() -> Space {
    Space::from_edges([
        ("-1_0", "0_0"),
        ("0_0", "1_0"),
        ("-1_1", "0_1"),
        ("0_1", "1_1"),
        ("-1_0", "-1_1"),
        ("0_0", "0_1"),
        ("1_0", "1_1"),
        ("0_1", "0_2"),
    ])
    .unwrap()
}

pub fn corners_cuts() -> Vec<VertexSet> {
    vec![vs(&["0_0", "0_1"]), vs(&["0_0", "0_1", "0_2"])]
}

/// Valid cut systems exercised by the invariant suites.
pub fn valid_systems() -> Vec<(&'static str, CutSystem)> {
    vec![
        (
            "path3",
            CutSystem::new(path(&["a", "b", "c"]), vec![vs(&["b"])]).unwrap(),
        ),
        (
            "path4",
            CutSystem::new(path(&["a", "b", "c", "d"]), vec![vs(&["b"]), vs(&["c"])]).unwrap(),
        ),
        (
            "path5",
            CutSystem::new(
                path(&["a", "b", "c", "d", "e"]),
                vec![vs(&["b"]), vs(&["c"]), vs(&["d"])],
            )
            .unwrap(),
        ),
        ("star", CutSystem::new(star(), vec![vs(&["v"])]).unwrap()),
        (
            "two-triangles",
            CutSystem::new(two_triangles(), vec![vs(&["v"])]).unwrap(),
        ),
        (
            "cycle4",
            CutSystem::new(cycle4(), vec![vs(&["1", "3"])]).unwrap(),
        ),
        (
            "corners-single",
            CutSystem::new(corners_space(), vec![vs(&["0_0", "0_1"])]).unwrap(),
        ),
    ]
}

/// All subsets of the given slice, as vertex sets.
pub fn power_set(vertices: &[&str]) -> Vec<VertexSet> {
    let n = vertices.len();
    (0..1u32 << n)
        .map(|mask| {
            VertexSet::new(
                vertices
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| *v),
            )
        })
        .collect()
}

/// Reachability on the induced subgraph by transitive closure.
fn closure(space: &Space, removed: &VertexSet) -> (Vec<String>, Vec<Vec<bool>>) {
    let kept: Vec<String> = space
        .vertices()
        .filter(|v| !removed.contains(v))
        .map(str::to_owned)
        .collect();
    let n = kept.len();
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        reach[i][i] = true;
        for j in 0..n {
            if space.has_edge(&kept[i], &kept[j]) {
                reach[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (kept, reach)
}

pub fn naive_components(space: &Space, removed: &VertexSet) -> Vec<VertexSet> {
    let (kept, reach) = closure(space, removed);
    let mut out: Vec<VertexSet> = Vec::new();
    let mut assigned = vec![false; kept.len()];
    for i in 0..kept.len() {
        if assigned[i] {
            continue;
        }
        let members: Vec<&str> = (i..kept.len())
            .filter(|&j| reach[i][j])
            .map(|j| {
                assigned[j] = true;
                kept[j].as_str()
            })
            .collect();
        out.push(VertexSet::new(members));
    }
    out.sort_by(|a, b| a.first().cmp(&b.first()));
    out
}

pub fn naive_separates(space: &Space, a: &VertexSet) -> bool {
    naive_components(space, a).len() >= 2
}

pub fn naive_separates_set(space: &Space, a: &VertexSet, p: &VertexSet) -> bool {
    let comps = naive_components(space, a);
    let ids: Vec<usize> = p
        .iter()
        .filter_map(|v| comps.iter().position(|c| c.contains(v)))
        .collect();
    ids.iter().any(|&x| ids.iter().any(|&y| x != y))
}

pub fn naive_separates_from(space: &Space, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> bool {
    let comps = naive_components(space, a);
    let b_ids: Vec<usize> = b
        .iter()
        .filter_map(|v| comps.iter().position(|cc| cc.contains(v)))
        .collect();
    let c_ids: Vec<usize> = c
        .iter()
        .filter_map(|v| comps.iter().position(|cc| cc.contains(v)))
        .collect();
    b_ids.iter().any(|&x| c_ids.iter().any(|&y| x != y))
}

pub fn naive_is_inseparable(space: &Space, cuts: &[VertexSet], p: &VertexSet) -> bool {
    cuts.iter().all(|a| !naive_separates_set(space, a, p))
}

/// Inclusion-maximal inseparable sets by exhaustive subset enumeration.
/// Exponential; callers keep the vertex count small.
pub fn naive_maximal_inseparable(space: &Space, cuts: &[VertexSet]) -> Vec<VertexSet> {
    let vertices: Vec<&str> = space.vertices().collect();
    assert!(
        vertices.len() <= 12,
        "subset enumeration oracle capped at 12 vertices"
    );
    let inseparable: Vec<VertexSet> = power_set(&vertices)
        .into_iter()
        .filter(|p| !p.is_empty() && naive_is_inseparable(space, cuts, p))
        .collect();
    let mut maximal: Vec<VertexSet> = inseparable
        .iter()
        .filter(|p| !inseparable.iter().any(|q| *p != q && p.is_subset(q)))
        .cloned()
        .collect();
    maximal.sort();
    maximal
}

pub fn naive_articulations(space: &Space) -> Vec<VertexSet> {
    space
        .vertices()
        .map(|v| VertexSet::new([v]))
        .filter(|s| naive_separates(space, s))
        .collect()
}

/// Betweenness straight from the two-stage definition, on top of the naive
/// separation oracle.
pub fn naive_between(
    space: &Space,
    cuts: &[VertexSet],
    x: &PretreeElement,
    b: &PretreeElement,
    c: &PretreeElement,
) -> bool {
    if x == b || x == c {
        return false;
    }
    match x.kind {
        ElementKind::Cut => naive_separates_from(space, &x.support, &b.support, &c.support),
        ElementKind::Blob => {
            if b == c {
                return false;
            }
            if b.kind == ElementKind::Cut
                && naive_separates_from(space, &b.support, &x.support, &c.support)
            {
                return false;
            }
            if c.kind == ElementKind::Cut
                && naive_separates_from(space, &c.support, &b.support, &x.support)
            {
                return false;
            }
            cuts.iter().all(|d| {
                !(naive_separates_from(space, d, &b.support, &x.support)
                    && naive_separates_from(space, d, &x.support, &c.support))
            })
        }
    }
}
