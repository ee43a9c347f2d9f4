//! Command-line front end.
//!
//! Exit codes: `0` on success, `1` when a computation fails or a checked
//! property does not hold, `2` for malformed input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{comb_product_z, retract, star_product, Color, ColoredGraph, GraphJson};
use crate::laurent::{verify_contact_theorem, walk_generating_series};
use crate::nevanlinna::{
    reciprocal_transform, representing_function, verify_comb_identity, verify_component_invariance,
    verify_relabel_invariance, verify_retract_identity, verify_schur_path, verify_star_identity,
    IdentityReport,
};
use crate::numcheck::pick_property_sample;
use crate::random;
use crate::ratfun::RatFun;
use crate::sticks::stick_determinants;

#[derive(Parser, Debug)]
#[command(name = "nevgraph", version, about = "Representing functions of vertex-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Relabel,
    Component,
    Schur,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Representing function f_G^k (default: the root).
    Repfun {
        graph: PathBuf,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reciprocal transform g_G = 1/f_G.
    Reciprocal {
        graph: PathBuf,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Star product of two graphs with equally colored roots.
    Star {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// z-comb product: a copy of H hung from every z vertex of G.
    Zcomb {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Replace a pendant subgraph by a recolored cut vertex.
    Retract {
        graph: PathBuf,
        #[arg(long)]
        cut: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        subgraph: Vec<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Contact order at the root next to twice the distance to the w vertex.
    Contact { graph: PathBuf },
    /// Walk generating function W_ij expanded at z = infinity.
    Walkgen {
        graph: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        order: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: SeriesFormat,
    },
    /// Table of stick determinants T_0..T_max.
    Sticks {
        #[arg(long)]
        max: usize,
    },
    /// Exact invariance checks on one graph.
    Verify {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Numeric sampling of the Pick and inner properties.
    Sample {
        graph: PathBuf,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_input_error() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_graph(path: &Path) -> std::result::Result<ColoredGraph, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    ColoredGraph::from_json_str(&src).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(out: &mut dyn Write, line: impl std::fmt::Display) -> std::result::Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("report serializes")
}

fn render(r: &RatFun, format: Format) -> String {
    match format {
        Format::Text => r.to_string(),
        Format::Json => to_json(&r.to_json()),
        Format::Latex => r.to_latex(),
    }
}

#[derive(Serialize)]
struct ProductReport {
    graph: GraphJson,
    report: IdentityReport,
}

/// Prints `{"graph": ..., "report": ...}` when verifying, else the graph.
fn emit_product(
    out: &mut dyn Write,
    graph: &ColoredGraph,
    report: Option<IdentityReport>,
) -> std::result::Result<(), Failure> {
    match report {
        None => emit(out, graph.to_json_string()),
        Some(r) => {
            let equal = r.equal;
            emit(out, to_json(&ProductReport { graph: graph.to_json(), report: r }))?;
            if equal {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: "identity does not hold".into(),
                })
            }
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cmd {
        Command::Repfun { graph, vertex, format } => {
            let g = read_graph(&graph)?;
            let f = representing_function(&g, vertex.unwrap_or(g.root()))?;
            emit(out, render(&f, format))
        }
        Command::Reciprocal { graph, vertex, format } => {
            let g = read_graph(&graph)?;
            let f = reciprocal_transform(&g, vertex.unwrap_or(g.root()))?;
            emit(out, render(&f, format))
        }
        Command::Star { g, h, verify } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            let product = star_product(&g, &h)?;
            let report = verify.then(|| verify_star_identity(&g, &h)).transpose()?;
            emit_product(out, &product, report)
        }
        Command::Zcomb { g, h, verify } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            let product = comb_product_z(&g, &h)?;
            let report = verify.then(|| verify_comb_identity(&g, &h)).transpose()?;
            emit_product(out, &product, report)
        }
        Command::Retract { graph, cut, subgraph, verify } => {
            let g = read_graph(&graph)?;
            let reduced = retract(&g, cut, &subgraph)?;
            let report = verify
                .then(|| verify_retract_identity(&g, cut, &subgraph))
                .transpose()?;
            emit_product(out, &reduced, report)
        }
        Command::Contact { graph } => {
            let g = read_graph(&graph)?;
            emit(out, to_json(&verify_contact_theorem(&g)?))
        }
        Command::Walkgen { graph, from, to, order, format } => {
            let g = read_graph(&graph)?;
            let s = walk_generating_series(&g, from, to, order)?;
            match format {
                SeriesFormat::Text => emit(out, s),
                SeriesFormat::Json => emit(out, to_json(&s.to_json())),
            }
        }
        Command::Sticks { max } => {
            let fam = stick_determinants(max);
            if !fam.agree {
                return Err(Failure {
                    code: 1,
                    message: "stick determinant derivations disagree".into(),
                });
            }
            write!(out, "{}", fam.table()).map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            })
        }
        Command::Verify { graph, suite, seed } => {
            let g = read_graph(&graph)?;
            let summary = verify_suites(&g, suite, seed)?;
            let pass = summary.pass;
            emit(out, to_json(&summary))?;
            if pass {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: "invariance check failed".into(),
                })
            }
        }
        Command::Sample { graph, count, seed } => {
            let g = read_graph(&graph)?;
            let report = pick_property_sample(&g, count, seed)?;
            emit(out, to_json(&report))?;
            if report.pass {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: "sampled values violate the Pick or inner property".into(),
                })
            }
        }
    }
}

/// Case counts for one invariance suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteTally {
    pub cases: usize,
    pub passed: usize,
}

impl SuiteTally {
    fn record(&mut self, report: IdentityReport) {
        self.cases += 1;
        self.passed += usize::from(report.equal);
    }
}

/// Aggregate of the invariance suites run on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relabel: Option<SuiteTally>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<SuiteTally>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur: Option<SuiteTally>,
    pub pass: bool,
}

fn verify_suites(g: &ColoredGraph, suite: Suite, seed: u64) -> Result<VerifySummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.len();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let relabel = if wants(Suite::Relabel) {
        let mut t = SuiteTally::default();
        for k in 1..=n {
            for _ in 0..3 {
                let phi = random::permutation(&mut rng, n);
                t.record(verify_relabel_invariance(g, &phi, k)?);
            }
        }
        Some(t)
    } else {
        None
    };
    let component = if wants(Suite::Component) {
        let mut t = SuiteTally::default();
        for extra in [
            ColoredGraph::single(Color::Z),
            ColoredGraph::single(Color::W),
            g.clone(),
            random::zw_graph(&mut rng, n.min(4)),
        ] {
            t.record(verify_component_invariance(g, &extra)?);
        }
        Some(t)
    } else {
        None
    };
    let schur = if wants(Suite::Schur) {
        let mut t = SuiteTally::default();
        for k in 1..=n {
            for _ in 0..2 {
                let chain = random::schur_chain(&mut rng, n, k);
                t.record(verify_schur_path(g, k, &chain)?);
            }
        }
        Some(t)
    } else {
        None
    };
    let pass = [&relabel, &component, &schur]
        .into_iter()
        .flatten()
        .all(|t| t.cases == t.passed);
    Ok(VerifySummary {
        relabel,
        component,
        schur,
        pass,
    })
}
