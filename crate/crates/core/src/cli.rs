//! The `copnc` command line.
//!
//! Exit codes: 0 success, 1 usage, 2 validation failure, 3 precondition
//! failure, 4 search exhausted or cap reached, 5 I/O.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cert::Certificate;
use crate::construct::{
    bipartite_triple, conformal_triple_general_with, nop_from_matching, ConformalOptions, ConstructError, Orientation,
};
use crate::corpus;
use crate::families::{derive, Family, FamilyError};
use crate::graph::io::{parse_edge_list, parse_edge_lists, parse_graph6};
use crate::graph::{generators, perfect_matchings, CubicGraph, EdgeId, GraphError, PerfectMatching};
use crate::search::{conjecture_sweep, SweepCheck, SweepInput};
use crate::switching::{all_markings, classes, switch_class, MoveKind, SwitchError};

#[derive(Parser, Debug)]
#[command(name = "copnc", version, about = "Compatible normal odd partitions of cubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a JSON certificate; exit 0 iff every partition is normal and
    /// all pairs are compatible.
    Validate {
        #[arg(long)]
        cert: PathBuf,
        /// graph the certificate must be about
        #[arg(long)]
        graph: Option<String>,
    },
    /// Build partitions with one of the constructions and print a certificate.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        graph: String,
        /// seeds the random orientation (matching) or the fallback walk (conformal)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the certificate of a family triple.
    Family {
        /// petersen, flower:k or goldberg:k
        #[arg(required_unless_present = "regenerate")]
        name: Option<String>,
        /// print the trails as vertex sequences instead of JSON
        #[arg(long)]
        emit_partitions: bool,
        /// re-derive the embedded data and fail if it drifted
        #[arg(long)]
        regenerate: bool,
    },
    /// Size and diameter of a switching class, and the class sizes of all
    /// partitions of the same kind.
    SwitchClass {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        moves: Moves,
        /// comma-separated edge ids; the first perfect matching if omitted
        #[arg(long, value_delimiter = ',')]
        matching: Option<Vec<u32>>,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Run a check over a file of graphs and write one JSON record per graph.
    Sweep {
        /// graph6 or edge-list file, or corpus:<up_to_10|up_to_12|simple_up_to_10|loopless_12>
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// JSONL output; standard output if omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    Matching,
    Bipartite,
    Conformal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Moves {
    Plain,
    Odd,
    Conformal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Check {
    /// every bridgeless graph has a compatible triple
    #[value(alias = "conj25")]
    BridgelessTriple,
    /// a length-3 compatible triple exists iff the graph is bipartite
    #[value(alias = "thm12")]
    ShortTripleIffBipartite,
    /// a normal odd partition exists iff a perfect matching does
    #[value(alias = "thm5")]
    OddPartitionIffMatching,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Exhausted(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Exhausted(_) => 4,
            CliError::Io { .. } => 5,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::SearchExhausted { .. } => CliError::Exhausted(e.to_string()),
            ConstructError::NotConformalTriple(_) => CliError::Validation(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Drift(_) | FamilyError::Underivable(_) => CliError::Validation(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<SwitchError> for CliError {
    fn from(e: SwitchError) -> Self {
        match e {
            SwitchError::CapExceeded { .. } => CliError::Exhausted(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Resolves `name`, `name:k`, `@file.g6` or `@file.edges`.
pub fn resolve_graph(spec: &str) -> Result<CubicGraph, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = read(Path::new(path))?;
        let g = if path.ends_with(".g6") {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(line)?
        } else {
            parse_edge_list(&text)?
        };
        return Ok(g);
    }
    let (name, k) = match spec.split_once(':') {
        Some((n, k)) => {
            let k = k.parse().map_err(|_| GraphError::BadParameter(format!("bad parameter in {spec:?}")))?;
            (n, Some(k))
        }
        None => (spec, None),
    };
    Ok(generators::generate(name, k)?)
}

/// Graphs of a sweep input, each tagged `<source>#<index>`; unparsable
/// records stay in the list as errors.
pub fn sweep_inputs(input: &str) -> Result<Vec<SweepInput>, CliError> {
    if let Some(name) = input.strip_prefix("corpus:") {
        let graphs = match name {
            "up_to_10" => corpus::up_to_10(),
            "up_to_12" => corpus::up_to_12(),
            "simple_up_to_10" => corpus::simple_up_to_10(),
            "loopless_12" => corpus::loopless_12(),
            _ => return Err(CliError::Precondition(format!("unknown corpus {name:?}"))),
        };
        return Ok(graphs.into_iter().map(|c| SweepInput { id: c.id, graph: Ok(c.graph) }).collect());
    }
    let path = input.strip_prefix('@').unwrap_or(input);
    let text = read(Path::new(path))?;
    let stem = Path::new(path).file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let parsed: Vec<Result<CubicGraph, GraphError>> = if path.ends_with(".g6") {
        text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
    } else {
        parse_edge_lists(&text)
    };
    Ok(parsed
        .into_iter()
        .enumerate()
        .map(|(i, g)| SweepInput { id: format!("{stem}#{i}"), graph: g.map_err(|e| e.to_string()) })
        .collect())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn matching_from(g: &CubicGraph, ids: Option<Vec<u32>>) -> Result<PerfectMatching, CliError> {
    match ids {
        Some(ids) => Ok(PerfectMatching::new(g, ids.into_iter().map(EdgeId).collect())?),
        None => {
            perfect_matchings(g).next().ok_or_else(|| CliError::Precondition(ConstructError::NoMatching.to_string()))
        }
    }
}

#[derive(Serialize)]
struct ClassReport {
    moves: String,
    matching: Vec<u32>,
    /// partitions of this kind in the graph
    total: usize,
    /// class sizes, largest first
    classes: Vec<usize>,
    /// the class of the partition built from the matching
    start: crate::switching::ClassSummary,
}

/// Runs one command, writing results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { cert, graph } => {
            let text = read(&cert)?;
            let expected = graph.as_deref().map(resolve_graph).transpose()?;
            let c = Certificate::parse(&text).map_err(|e| CliError::Validation(e.to_string()))?;
            let report = c.check(expected.as_ref()).map_err(|e| CliError::Validation(e.to_string()))?;
            emit(out, &json(&report))?;
            if report.valid {
                Ok(())
            } else {
                Err(CliError::Validation("certificate does not validate".into()))
            }
        }
        Command::Construct { method, graph, seed } => {
            let g = resolve_graph(&graph)?;
            let cert = match method {
                Method::Matching => {
                    let m = matching_from(&g, None)?;
                    let orient = seed.map(|s| Orientation::random(&g, &m, &mut ChaCha8Rng::seed_from_u64(s)));
                    let p = nop_from_matching(&g, &m, orient.as_ref())?;
                    Certificate::new(&g, [&p])
                }
                Method::Bipartite => {
                    let t = bipartite_triple(&g)?;
                    Certificate::new(&g, t.partitions()).with_coloring(t.coloring().colors())
                }
                Method::Conformal => {
                    let opts = ConformalOptions { seed: seed.unwrap_or(0), ..ConformalOptions::default() };
                    let (t, red) = conformal_triple_general_with(&g, &opts)?;
                    log::info!(
                        "reduction {:?}, core of {} vertices via {:?}",
                        red.steps,
                        red.core_vertices,
                        red.core_path
                    );
                    Certificate::new(&g, t.partitions()).with_coloring(t.coloring().colors())
                }
            };
            emit(out, &cert.to_json())
        }
        Command::Family { name, emit_partitions, regenerate } => {
            if regenerate {
                derive::regenerate()?;
                log::info!("embedded family data matches its derivation");
            }
            let Some(name) = name else { return Ok(()) };
            let fam: Family = name.parse()?;
            let g = fam.graph()?;
            let t = fam.triple()?;
            if emit_partitions {
                for (i, p) in t.iter().enumerate() {
                    for tr in p.trails() {
                        let vs: Vec<String> = tr.vertices().iter().map(|v| v.0.to_string()).collect();
                        emit(out, &format!("{i}: {}", vs.join(" ")))?;
                    }
                }
                Ok(())
            } else {
                emit(out, &Certificate::new(&g, t.iter()).to_json())
            }
        }
        Command::SwitchClass { graph, moves, matching, cap } => {
            let g = resolve_graph(&graph)?;
            let m = matching_from(&g, matching)?;
            let start = nop_from_matching(&g, &m, None)?;
            let (kind, label) = match moves {
                Moves::Plain => (MoveKind::Plain, "plain"),
                Moves::Odd => (MoveKind::Odd, "odd"),
                Moves::Conformal => (MoveKind::Conformal(m.clone()), "conformal"),
            };
            let all = all_markings(&g, &kind, cap)?;
            let mut sizes: Vec<usize> = classes(&g, &all, &kind).iter().map(|c| c.len()).collect();
            sizes.sort_by(|a, b| b.cmp(a));
            let report = ClassReport {
                moves: label.into(),
                matching: m.edges().iter().map(|e| e.0).collect(),
                total: all.len(),
                classes: sizes,
                start: switch_class(&g, &start, &kind, cap)?,
            };
            emit(out, &json(&report))
        }
        Command::Sweep { input, check, jobs, out: path } => {
            let inputs = sweep_inputs(&input)?;
            let check = match check {
                Check::BridgelessTriple => SweepCheck::BridgelessTriple,
                Check::ShortTripleIffBipartite => SweepCheck::ShortTripleIffBipartite,
                Check::OddPartitionIffMatching => SweepCheck::OddPartitionIffMatching,
            };
            let records = conjecture_sweep(&inputs, check, jobs);
            let mut text = String::new();
            for r in &records {
                text.push_str(&serde_json::to_string(r).expect("plain data serializes"));
                text.push('\n');
            }
            match path {
                Some(p) => {
                    fs::write(&p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source })?
                }
                None => write!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })?,
            }
            let bad: Vec<&str> = records.iter().filter(|r| r.agrees == Some(false)).map(|r| r.id.as_str()).collect();
            let counter = records.iter().filter(|r| r.is_counterexample()).count();
            log::info!("{} records, {} disagreements, {} counterexamples", records.len(), bad.len(), counter);
            if bad.is_empty() {
                Ok(())
            } else {
                Err(CliError::Validation(format!("disagreement on {}", bad.join(", "))))
            }
        }
    }
}
