//! Command-line front end. Each command returns its exit code and output so
//! that tests can drive it without a process.
//!
//! Exit codes: 0 the property holds, 1 it fails (with a certificate),
//! 2 inconclusive at the bound, 3 invalid input.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{
    self, all_ideals_gauge_invariant, cofinality_doc, is_simple, render_cofinality, render_gauge,
    render_scan, render_simplicity, GaugeVerdict, Simplicity,
};
use crate::document::GraphDocument;
use crate::error::{Error, Result};
use crate::factorization::KGraph;
use crate::fixtures;
use crate::ideals::{self, is_cofinal, Cofinality, VertexSet};
use crate::periodicity::{default_bound, scan_aperiodicity, ScanOptions, ScanOutcome};

pub const HOLDS: i32 = 0;
pub const FAILS: i32 = 1;
pub const INCONCLUSIVE: i32 = 2;
pub const INVALID: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kgraph", version, about = "Decide structural properties of finite k-graphs")]
pub struct Cli {
    /// Plain-text summary instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Worker threads for the periodicity scans.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph document, or `-` for standard input.
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct BoundArg {
    /// Largest |p_i| scanned; defaults to |vertices| + max edges of one color.
    #[arg(long, value_name = "B")]
    pub bound: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the document presents a k-graph.
    Validate(GraphArg),
    /// Scan for local periodicity up to a bound.
    Aperiodic {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Decide cofinality.
    Cofinal(GraphArg),
    /// Decide simplicity (up to the periodicity bound).
    Simple {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// List saturated hereditary sets and test every quotient for periodicity.
    Ideals {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Print the quotient by a saturated hereditary set.
    Quotient {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertex ids.
        #[arg(long = "set", value_name = "H", value_delimiter = ',', num_args = 0..)]
        set: Vec<String>,
    },
    /// Every analysis in one report.
    Analyze {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Print a built-in fixture: T2, F, D, D2 or P2.
    Fixture { name: String },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(message: String) -> Self {
        Outcome {
            code: INVALID,
            stdout: String::new(),
            stderr: message,
        }
    }
}

fn render<T: Serialize>(text: bool, doc: &T, summary: impl FnOnce() -> String) -> String {
    if text {
        let mut s = summary();
        s.push('\n');
        s
    } else {
        let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn read_document(file: &PathBuf, stdin: &mut dyn Read) -> Result<GraphDocument> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file)?
    };
    GraphDocument::from_json(&text)
}

fn load(file: &PathBuf, stdin: &mut dyn Read) -> Result<(GraphDocument, KGraph)> {
    let doc = read_document(file, stdin)?;
    let g = doc.build()?;
    Ok((doc, g))
}

fn options(cli_jobs: Option<usize>, g: &KGraph, bound: &BoundArg) -> ScanOptions {
    ScanOptions {
        jobs: cli_jobs,
        ..ScanOptions::new(bound.bound.unwrap_or_else(|| default_bound(g)))
    }
}

/// Runs one parsed command. `stdin` backs the `-` file argument.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match dispatch(cli, stdin) {
        Ok(o) => o,
        Err(e) => Outcome::invalid(e.to_string()),
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let text = cli.text;
    match &cli.command {
        Command::Validate(arg) => {
            let doc = read_document(&arg.file, stdin)?;
            let report = doc.validate();
            let code = if report.is_valid() { HOLDS } else { INVALID };
            let out = render(text, &json!({ "valid": report.is_valid(), "violations": report.violations }), || {
                report.to_string()
            });
            Ok(Outcome::ok(code, out))
        }
        Command::Aperiodic { graph, bound } => {
            let (_, g) = load(&graph.file, stdin)?;
            let report = scan_aperiodicity(&g, options(cli.jobs, &g, bound))?;
            let code = match report.outcome {
                ScanOutcome::Aperiodic { .. } => HOLDS,
                ScanOutcome::Periodic { .. } => FAILS,
                ScanOutcome::Inconclusive { .. } => INCONCLUSIVE,
            };
            let doc = report.to_doc(&g);
            Ok(Outcome::ok(code, render(text, &doc, || render_scan(&doc))))
        }
        Command::Cofinal(arg) => {
            let (_, g) = load(&arg.file, stdin)?;
            let c = is_cofinal(&g);
            let code = if c == Cofinality::Cofinal { HOLDS } else { FAILS };
            let doc = cofinality_doc(&g, &c);
            Ok(Outcome::ok(code, render(text, &doc, || render_cofinality(&doc))))
        }
        Command::Simple { graph, bound } => {
            let (_, g) = load(&graph.file, stdin)?;
            let report = is_simple(&g, options(cli.jobs, &g, bound))?;
            let code = match report.verdict {
                Simplicity::SimpleUpToBound => HOLDS,
                Simplicity::NotSimple(_) => FAILS,
                Simplicity::InconclusiveAtBound => INCONCLUSIVE,
            };
            let doc = report.to_doc(&g);
            Ok(Outcome::ok(code, render(text, &doc, || render_simplicity(&doc))))
        }
        Command::Ideals { graph, bound } => {
            let (_, g) = load(&graph.file, stdin)?;
            let opts = options(cli.jobs, &g, bound);
            let sets = ideals::enumerate_sat_her(&g)?;
            let gauge = all_ideals_gauge_invariant(&g, opts)?;
            let code = match gauge.verdict() {
                GaugeVerdict::AllGaugeInvariantUpToBound => HOLDS,
                GaugeVerdict::NotAllGaugeInvariant => FAILS,
                GaugeVerdict::Inconclusive => INCONCLUSIVE,
            };
            let names: Vec<Vec<String>> = sets.iter().map(|h| h.names(&g)).collect();
            let gdoc = gauge.to_doc(&g);
            let doc = json!({ "saturated_hereditary": names, "gauge": gdoc });
            Ok(Outcome::ok(
                code,
                render(text, &doc, || {
                    let listed: Vec<String> = names.iter().map(|s| format!("{{{}}}", s.join(", "))).collect();
                    format!("saturated hereditary sets: {}\n{}", listed.join(" "), render_gauge(&gdoc))
                }),
            ))
        }
        Command::Quotient { graph, set } => {
            let (_, g) = load(&graph.file, stdin)?;
            let names: Vec<&str> = set.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
            let h = VertexSet::from_names(&g, &names)?;
            let doc = ideals::quotient_document(&g, &h)?;
            doc.build()?;
            Ok(Outcome::ok(HOLDS, render(false, &doc, String::new)))
        }
        Command::Analyze { graph, bound } => {
            let (doc, g) = load(&graph.file, stdin)?;
            let report = analysis::analyze(&g, doc.name.as_deref(), options(cli.jobs, &g, bound))?;
            let code = match &report.simplicity {
                analysis::SimplicityDoc::SimpleUpToBound { .. } => HOLDS,
                analysis::SimplicityDoc::NotSimple { .. } => FAILS,
                analysis::SimplicityDoc::InconclusiveAtBound { .. } => INCONCLUSIVE,
            };
            Ok(Outcome::ok(code, render(text, &report, || analysis::render_report(&report))))
        }
        Command::Fixture { name } => {
            let doc = fixtures::document(name).ok_or_else(|| Error::UnknownFixture(name.clone()))?;
            Ok(Outcome::ok(HOLDS, render(false, &doc, String::new)))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin),
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => HOLDS,
                _ => INVALID,
            };
            Outcome {
                code,
                stdout: if code == HOLDS { e.to_string() } else { String::new() },
                stderr: if code == HOLDS { String::new() } else { e.to_string() },
            }
        }
    }
}
