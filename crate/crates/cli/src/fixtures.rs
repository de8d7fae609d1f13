//! The bundled fixture corpus: small spaces with cut families and their
//! expected outcomes. The test suites re-verify every expectation on every
//! run; the `fixture` subcommand materializes them as input files.

use septree::{Space, VertexSet};

/// What a fixture is supposed to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    /// Validation passes and the pretree has these element/blob counts.
    Valid { elements: usize, blobs: usize },
    /// Validation fails exactly this condition (1, 2 or 3).
    FailsCondition(u8),
}

pub struct Fixture {
    pub name: &'static str,
    pub space: Space,
    pub cuts: Vec<VertexSet>,
    pub expected: Expected,
}

impl Fixture {
    pub fn is_valid(&self) -> bool {
        matches!(self.expected, Expected::Valid { .. })
    }
}

fn vs(members: &[&str]) -> VertexSet {
    VertexSet::new(members.iter().copied())
}

fn path_space(names: &[&str]) -> Space {
    Space::from_edges(names.windows(2).map(|w| (w[0], w[1]))).unwrap()
}

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Path on `n` lettered vertices with every interior vertex a cut.
fn path_fixture(name: &'static str, n: usize) -> Fixture {
    let names = letters(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let space = path_space(&refs);
    let cuts: Vec<VertexSet> = refs[1..n - 1].iter().map(|v| vs(&[v])).collect();
    Fixture {
        name,
        space,
        cuts,
        // interior cuts plus one blob per edge
        expected: Expected::Valid {
            elements: (n - 2) + (n - 1),
            blobs: n - 1,
        },
    }
}

/// The [-1..1] x [0..1] unit grid with a tail from (0,1) up to (0,2).
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

/// The full corpus in a fixed order.
pub fn corpus() -> Vec<Fixture> {
    let cycle4 = || Space::from_edges([("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]).unwrap();
    vec![
        path_fixture("path3", 3),
        // blob {b, c} is a union of cuts: the quotient construction misses it
        path_fixture("path4", 4),
        path_fixture("path5", 5),
        path_fixture("path13", 13),
        path_fixture("path21", 21),
        // three legs of three edges glued at a center: a branching tree of
        // cuts, unlike the path fixtures
        Fixture {
            name: "spider",
            space: Space::from_edges([
                ("m", "a1"),
                ("a1", "a2"),
                ("a2", "a3"),
                ("m", "b1"),
                ("b1", "b2"),
                ("b2", "b3"),
                ("m", "c1"),
                ("c1", "c2"),
                ("c2", "c3"),
            ])
            .unwrap(),
            cuts: ["m", "a1", "a2", "b1", "b2", "c1", "c2"]
                .iter()
                .map(|v| vs(&[v]))
                .collect(),
            expected: Expected::Valid {
                elements: 16,
                blobs: 9,
            },
        },
        Fixture {
            name: "star",
            space: Space::from_edges([("v", "x"), ("v", "y"), ("v", "z")]).unwrap(),
            cuts: vec![vs(&["v"])],
            expected: Expected::Valid {
                elements: 4,
                blobs: 3,
            },
        },
        Fixture {
            name: "two-triangles",
            space: Space::from_edges([
                ("v", "a1"),
                ("v", "a2"),
                ("a1", "a2"),
                ("v", "b1"),
                ("v", "b2"),
                ("b1", "b2"),
            ])
            .unwrap(),
            cuts: vec![vs(&["v"])],
            expected: Expected::Valid {
                elements: 3,
                blobs: 2,
            },
        },
        Fixture {
            name: "cycle4",
            space: cycle4(),
            cuts: vec![vs(&["1", "3"])],
            expected: Expected::Valid {
                elements: 3,
                blobs: 2,
            },
        },
        // no cuts at all: the whole space is one blob
        Fixture {
            name: "cycle4-bare",
            space: cycle4(),
            cuts: vec![],
            expected: Expected::Valid {
                elements: 1,
                blobs: 1,
            },
        },
        Fixture {
            name: "cycle4-double",
            space: cycle4(),
            cuts: vec![vs(&["1", "3"]), vs(&["2", "4"])],
            expected: Expected::FailsCondition(2),
        },
        Fixture {
            name: "corners-single",
            space: corners_space(),
            cuts: vec![vs(&["0_0", "0_1"])],
            expected: Expected::Valid {
                elements: 4,
                blobs: 3,
            },
        },
        Fixture {
            name: "corners",
            space: corners_space(),
            cuts: vec![vs(&["0_0", "0_1"]), vs(&["0_0", "0_1", "0_2"])],
            expected: Expected::FailsCondition(3),
        },
    ]
}

pub fn by_name(name: &str) -> Option<Fixture> {
    corpus().into_iter().find(|f| f.name == name)
}
