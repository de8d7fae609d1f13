//! Command implementations. Each command produces an [`Outcome`] so the
//! binary and the test suite share one code path.
//!
//! Exit-code contract: 0 success, 1 cut-family validation failure,
//! 2 input/parse error, 3 internal consistency violation (a structural
//! guarantee failed), 4 oracle mismatch.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use septree::{
    induce, io, realize, verify_equivariance, Automorphism, CutSystem, Error, ExportFormat,
    Pretree, PretreeElement, Result, Space, VertexSet,
};

use crate::blockcut;
use crate::fixtures;
use crate::randgen;

#[derive(Parser)]
#[command(
    name = "septree",
    version,
    about = "Build median pretrees and simplicial trees from families of vertex cuts"
)]
pub struct Cli {
    /// Recompute the betweenness relation from the definitions and verify
    /// the pretree axioms whenever a pretree is built.
    #[arg(long, global = true)]
    pub checked: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    /// Singleton cuts at the articulation vertices.
    Articulation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Validate a cut family against the three admissibility conditions.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cuts: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build the pretree and print its elements as JSON.
    Build {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "generator")]
        cuts: Option<PathBuf>,
        #[arg(long = "gen", value_enum)]
        generator: Option<Generator>,
        /// Include the full betweenness triple relation (large).
        #[arg(long)]
        betweenness: bool,
    },
    /// Realize the pretree as a simplicial tree and export it.
    Tree {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "generator")]
        cuts: Option<PathBuf>,
        #[arg(long = "gen", value_enum)]
        generator: Option<Generator>,
        #[arg(long, value_enum, default_value_t = TreeFormat::Dot)]
        format: TreeFormat,
    },
    /// Print the median of three elements. Selectors are comma-joined
    /// sorted vertex lists, e.g. `b` or `a,b`.
    Median {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "generator")]
        cuts: Option<PathBuf>,
        #[arg(long = "gen", value_enum)]
        generator: Option<Generator>,
        #[arg(num_args = 3, value_names = ["A", "B", "C"])]
        selectors: Vec<String>,
    },
    /// Run the pipeline with articulation cuts and compare blobs and the
    /// realized tree against the classical block-cut construction.
    OracleBlockcut {
        #[arg(long, conflicts_with = "random")]
        graph: Option<PathBuf>,
        /// Check this many seeded random connected graphs instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        min_n: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply a vertex permutation to the pretree and verify equivariance.
    Act {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "generator")]
        cuts: Option<PathBuf>,
        #[arg(long = "gen", value_enum)]
        generator: Option<Generator>,
        /// JSON file mapping vertex to vertex.
        #[arg(long)]
        perm: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List bundled fixtures or write one out as input files.
    Fixture {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
pub enum FixtureAction {
    /// Print the fixture names and their expectations.
    List,
    /// Write `<name>.graph.json` and `<name>.cuts.json`.
    Dump {
        name: String,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

/// What a command run produced.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Input(_) => 2,
        Error::Axioms(_) => 1,
        Error::Consistency(_) => 3,
        Error::ResourceLimit(_) => 2,
    }
}

fn fail(err: Error) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
        code: exit_code(&err),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Space> {
    io::parse_graph(&read(path)?)
}

fn load_cuts(
    space: &Space,
    path: Option<&PathBuf>,
    generator: Option<Generator>,
) -> Result<Vec<VertexSet>> {
    match (path, generator) {
        (Some(path), None) => io::parse_cuts(&read(path)?),
        (None, Some(Generator::Articulation)) => Ok(septree::articulation_cuts(space)),
        (None, None) | (Some(_), Some(_)) => Err(Error::Input(
            "need exactly one of --cuts <file> or --gen articulation".into(),
        )),
    }
}

fn build_pretree(space: Space, cuts: Vec<VertexSet>, checked: bool) -> Result<Pretree> {
    let cs = CutSystem::new(space, cuts)?;
    if checked {
        Pretree::new_checked(cs)
    } else {
        Pretree::new(cs)
    }
}

fn parse_selector(p: &Pretree, selector: &str) -> Result<usize> {
    let support: VertexSet = selector
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    p.index_of_support(&support)
        .ok_or_else(|| Error::Input(format!("no element has support {support}")))
}

pub fn run(cli: Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(err) => fail(err),
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Verify { graph, cuts, json } => {
            let space = load_graph(&graph)?;
            let cuts = io::parse_cuts(&read(&cuts)?)?;
            let report = septree::validate(&space, &cuts)?;
            let stdout = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                format!("{report}\n")
            };
            let code = if report.all_pass() { 0 } else { 1 };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code,
            })
        }
        Command::Build {
            graph,
            cuts,
            generator,
            betweenness,
        } => {
            let space = load_graph(&graph)?;
            let cuts = load_cuts(&space, cuts.as_ref(), generator)?;
            let pretree = build_pretree(space, cuts, cli.checked)?;
            Ok(Outcome::ok(pretree.to_json(betweenness) + "\n"))
        }
        Command::Tree {
            graph,
            cuts,
            generator,
            format,
        } => {
            let space = load_graph(&graph)?;
            let cuts = load_cuts(&space, cuts.as_ref(), generator)?;
            let pretree = build_pretree(space, cuts, cli.checked)?;
            let tree = realize(&pretree)?;
            let text = match format {
                TreeFormat::Dot => tree.export(ExportFormat::Dot),
                TreeFormat::Json => tree.export(ExportFormat::Json) + "\n",
            };
            Ok(Outcome::ok(text))
        }
        Command::Median {
            graph,
            cuts,
            generator,
            selectors,
        } => {
            let space = load_graph(&graph)?;
            let cuts = load_cuts(&space, cuts.as_ref(), generator)?;
            let pretree = build_pretree(space, cuts, cli.checked)?;
            let idx: Vec<usize> = selectors
                .iter()
                .map(|s| parse_selector(&pretree, s))
                .collect::<Result<_>>()?;
            let m = pretree.median_idx(idx[0], idx[1], idx[2])?;
            Ok(Outcome::ok(format!("{}\n", pretree.element(m))))
        }
        Command::OracleBlockcut {
            graph,
            random,
            seed,
            min_n,
            max_n,
            json,
        } => match (graph, random) {
            (Some(path), None) => {
                let space = load_graph(&path)?;
                let cmp = blockcut::compare_with_pipeline(&space)?;
                let stdout = if json {
                    serde_json::to_string_pretty(&cmp).expect("comparison serializes") + "\n"
                } else {
                    format!("{cmp}\n")
                };
                let code = if cmp.is_match() { 0 } else { 4 };
                Ok(Outcome {
                    stdout,
                    stderr: String::new(),
                    code,
                })
            }
            (None, Some(count)) => {
                if min_n < 2 || min_n > max_n {
                    return Err(Error::Input(format!("bad size range {min_n}..={max_n}")));
                }
                let mut lines = Vec::new();
                let mut entries = Vec::new();
                let mut mismatches = 0usize;
                for (i, space) in randgen::battery(seed, count, min_n, max_n)
                    .iter()
                    .enumerate()
                {
                    let cmp = blockcut::compare_with_pipeline(space)?;
                    if cmp.is_match() {
                        lines.push(format!("graph {i:02} (n={}): match", space.vertex_count()));
                    } else {
                        mismatches += 1;
                        lines.push(format!(
                            "graph {i:02} (n={}): MISMATCH\n{cmp}",
                            space.vertex_count()
                        ));
                    }
                    entries.push(serde_json::json!({
                        "index": i,
                        "vertices": space.vertex_count(),
                        "match": cmp.is_match(),
                    }));
                }
                lines.push(format!(
                    "battery: {}/{} matched (seed {seed})",
                    count - mismatches,
                    count
                ));
                let stdout = if json {
                    let value = serde_json::json!({
                        "seed": seed,
                        "matched": count - mismatches,
                        "total": count,
                        "graphs": entries,
                    });
                    serde_json::to_string_pretty(&value).expect("battery serializes") + "\n"
                } else {
                    lines.join("\n") + "\n"
                };
                let code = if mismatches == 0 { 0 } else { 4 };
                Ok(Outcome {
                    stdout,
                    stderr: String::new(),
                    code,
                })
            }
            _ => Err(Error::Input(
                "need exactly one of --graph or --random <count>".into(),
            )),
        },
        Command::Act {
            graph,
            cuts,
            generator,
            perm,
            json,
        } => {
            let space = load_graph(&graph)?;
            let cuts = load_cuts(&space, cuts.as_ref(), generator)?;
            let mapping = io::parse_permutation(&read(&perm)?)?;
            let pretree = build_pretree(space, cuts, cli.checked)?;
            let g = Automorphism::for_system(pretree.system(), mapping)?;
            let image = induce(&pretree, &g)?;
            let report = verify_equivariance(&pretree, &g)?;
            if !report.is_ok() {
                return Err(Error::Consistency(format!(
                    "induced map is not equivariant: {} betweenness and {} edge violations",
                    report.betweenness_violations.len(),
                    report.edge_violations.len()
                )));
            }
            let pairs: Vec<(&PretreeElement, &PretreeElement)> = image
                .iter()
                .enumerate()
                .map(|(i, &j)| (pretree.element(i), pretree.element(j)))
                .collect();
            let stdout = if json {
                let value = serde_json::json!({
                    "equivariant": true,
                    "mapping": pairs
                        .iter()
                        .map(|(a, b)| [a.label(), b.label()])
                        .collect::<Vec<_>>(),
                });
                serde_json::to_string_pretty(&value).expect("mapping serializes") + "\n"
            } else {
                let mut text: String = pairs.iter().map(|(a, b)| format!("{a} -> {b}\n")).collect();
                text.push_str("equivariance: verified\n");
                text
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Fixture { action } => match action {
            FixtureAction::List => {
                let mut out = String::new();
                for f in fixtures::corpus() {
                    let expectation = match f.expected {
                        fixtures::Expected::Valid { elements, blobs } => {
                            format!("valid ({elements} elements, {blobs} blobs)")
                        }
                        fixtures::Expected::FailsCondition(c) => {
                            format!("fails condition {c}")
                        }
                    };
                    out.push_str(&format!(
                        "{:<16} n={:<3} cuts={:<3} {expectation}\n",
                        f.name,
                        f.space.vertex_count(),
                        f.cuts.len()
                    ));
                }
                Ok(Outcome::ok(out))
            }
            FixtureAction::Dump { name, dir } => {
                let fixture = fixtures::by_name(&name)
                    .ok_or_else(|| Error::Input(format!("no fixture named '{name}'")))?;
                fs::create_dir_all(&dir)
                    .map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
                let graph_path = dir.join(format!("{name}.graph.json"));
                let cuts_path = dir.join(format!("{name}.cuts.json"));
                fs::write(&graph_path, io::graph_to_json(&fixture.space)).map_err(|e| {
                    Error::Input(format!("cannot write {}: {e}", graph_path.display()))
                })?;
                fs::write(&cuts_path, io::cuts_to_json(&fixture.cuts)).map_err(|e| {
                    Error::Input(format!("cannot write {}: {e}", cuts_path.display()))
                })?;
                Ok(Outcome::ok(format!(
                    "{}\n{}\n",
                    graph_path.display(),
                    cuts_path.display()
                )))
            }
        },
    }
}
